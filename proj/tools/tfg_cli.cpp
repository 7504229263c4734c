// Command-line front end for the topological full group workbench: load a
// substitution system, recode it, query languages and towers, evaluate
// generator words, and emit/verify the truncated presentation.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tfg/error.hpp"
#include "tfg/group.hpp"
#include "tfg/language.hpp"
#include "tfg/presentation.hpp"
#include "tfg/recoder.hpp"
#include "tfg/towers.hpp"

namespace {

struct RunConfig {
  std::string system_file;
  int max_word_len = 5;
  int depth = 2;
  int offset_min = 1;
  int offset_max = 1 << 20;
  std::string offsets_text;
  std::string seed_point_text = "a.a:2";
  std::string seed_point2_text;
  std::string out_path;
  long long seed = 0;
  int ceiling = 32;
  int aperiodicity_depth = 16;
  bool recoded = false;
  bool via_group = false;
  int level = 1;
  int length = 3;
  int tietze_k = 1;
  int alt_n = 5;
  std::string word_text;
  std::string word_file;
  std::string u_text, v_text;
};

std::shared_ptr<const tfg::SubstitutionSystem> load_system(const RunConfig& cfg) {
  if (cfg.system_file.empty()) throw CLI::ValidationError("--system is required");
  return tfg::SubstitutionSystem::create(tfg::Substitution::from_json_file(cfg.system_file),
                                         cfg.aperiodicity_depth);
}

std::shared_ptr<const tfg::RecodedSystem> load_recoded(const RunConfig& cfg) {
  return tfg::RecodedSystem::create(load_system(cfg), cfg.ceiling);
}

tfg::SeedPoint parse_seed(const tfg::SubstitutionSystem& sys, const std::string& text) {
  auto dot = text.find('.');
  auto colon = text.find(':');
  if (dot == std::string::npos || colon == std::string::npos || colon < dot) {
    throw CLI::ValidationError("seed point must look like b.a:p");
  }
  auto left = sys.substitution().alphabet().index_of(text.substr(0, dot));
  auto right = sys.substitution().alphabet().index_of(text.substr(dot + 1, colon - dot - 1));
  if (!left || !right) throw CLI::ValidationError("unknown seed symbol in " + text);
  return tfg::SeedPoint{*left, *right, std::stoi(text.substr(colon + 1))};
}

void parse_offsets(RunConfig& cfg) {
  if (cfg.offsets_text.empty()) return;
  auto sep = cfg.offsets_text.find("..");
  if (sep == std::string::npos) throw CLI::ValidationError("--offsets must look like a..b");
  cfg.offset_min = std::stoi(cfg.offsets_text.substr(0, sep));
  cfg.offset_max = std::stoi(cfg.offsets_text.substr(sep + 2));
}

tfg::Word parse_plain_word(const tfg::LanguageOracle& sys, const std::string& text, bool recoded) {
  if (!recoded) {
    return dynamic_cast<const tfg::SubstitutionSystem&>(sys).substitution().alphabet().parse(text);
  }
  tfg::Word w;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, '-')) w.append(std::stoi(part));
  return w;
}

std::vector<tfg::GeneratorSymbol> read_generator_word(const RunConfig& cfg) {
  std::string text = cfg.word_text;
  if (!cfg.word_file.empty()) {
    std::ifstream in(cfg.word_file);
    if (!in) throw CLI::ValidationError("cannot open " + cfg.word_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  if (text.empty()) throw CLI::ValidationError("need --word or --word-file");
  return tfg::parse_generator_word(text);
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw CLI::ValidationError("cannot write " + cfg.out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for topological full groups of substitution subshifts"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--system", cfg.system_file, "subshift definition file (JSON)");
  app.add_option("--max-word-len", cfg.max_word_len, "relator word-length bound W");
  app.add_option("--depth", cfg.depth, "refinement depth for partition relators");
  app.add_option("--offsets", cfg.offsets_text, "offset range a..b");
  app.add_option("--seed-point", cfg.seed_point_text, "substitution-fixed point b.a:p");
  app.add_option("--seed-point2", cfg.seed_point2_text, "second point for factorize");
  app.add_option("--out", cfg.out_path, "output path (default stdout)");
  app.add_option("--seed", cfg.seed, "seed for randomized sweeps");
  app.add_option("--ceiling", cfg.ceiling, "search ceiling for n0 and related scans");
  app.add_flag("--recoded", cfg.recoded, "run on the recoded system");
  app.add_flag("--via-group", cfg.via_group, "decide membership through the group");
  app.add_option("--level", cfg.level, "KR partition level");
  app.add_option("--n", cfg.alt_n, "alternating group degree");
  app.add_option("--word", cfg.word_text, "word or generator-token sequence");
  app.add_option("--word-file", cfg.word_file, "file holding a generator-token sequence");
  app.add_option("--u", cfg.u_text, "left word for return-word queries");
  app.add_option("--v", cfg.v_text, "right word for return-word queries");

  auto* cmd_check = app.add_subcommand("check-system", "primitivity/aperiodicity report");
  auto* cmd_recode = app.add_subcommand("recode", "print n0 and the B-alphabet");
  auto* cmd_factors = app.add_subcommand("factors", "enumerate L_m");
  cmd_factors->add_option("--length", cfg.length, "factor length")->required();
  auto* cmd_member = app.add_subcommand("member", "language membership");
  auto* cmd_returns = app.add_subcommand("returns", "return words to u.v");
  auto* cmd_kr = app.add_subcommand("kr", "Kakutani-Rokhlin partition table");
  auto* cmd_sigma = app.add_subcommand("sigma-eval", "evaluate a generator word");
  auto* cmd_wp = app.add_subcommand("wordproblem", "decide whether a generator word is trivial");
  auto* cmd_rel = app.add_subcommand("relators", "emit the truncated presentation");
  auto* cmd_verify = app.add_subcommand("verify-relators", "emit and evaluate every relator");
  auto* cmd_tietze = app.add_subcommand("tietze", "expand x_(w,k) over the base generators");
  cmd_tietze->add_option("--k", cfg.tietze_k, "offset k")->required();
  auto* cmd_fact = app.add_subcommand("factorize", "P.Q factorization of a generator word");
  auto* cmd_alt = app.add_subcommand("alt-check", "alternating-group presentation oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    parse_offsets(cfg);

    if (cmd_check->parsed()) {
      std::shared_ptr<const tfg::SubstitutionSystem> sys;
      try {
        sys = load_system(cfg);
      } catch (const tfg::Error& e) {
        if (e.code() == tfg::Errc::NotPrimitive) {
          std::cout << "primitive=false\n";
          return 1;
        }
        throw;
      }
      std::cout << "primitive=true\n";
      std::cout << "alphabet=" << sys->alphabet_size() << "\n";
      std::cout << "two_blocks=" << sys->two_blocks().size() << "\n";
      std::cout << "aperiodic[" << cfg.aperiodicity_depth
                << "]=" << (sys->aperiodicity_checked() ? "true" : "false") << "\n";
      std::cout << "dagger=" << (sys->satisfies_dagger() ? "true" : "false") << "\n";
    } else if (cmd_recode->parsed()) {
      auto rec = load_recoded(cfg);
      std::cout << "n0=" << rec->n0() << "\n";
      for (size_t k = 0; k < rec->b_alphabet().size(); ++k) {
        std::cout << k << ": " << rec->base()->render_word(rec->b_alphabet()[k]) << "\n";
      }
    } else if (cmd_factors->parsed()) {
      tfg::OraclePtr sys = cfg.recoded ? tfg::OraclePtr(load_recoded(cfg))
                                       : tfg::OraclePtr(load_system(cfg));
      for (const tfg::Word& w : sys->factors(cfg.length)) {
        std::cout << sys->render_word(w) << "\n";
      }
    } else if (cmd_member->parsed()) {
      if (cfg.via_group) {
        auto rec = load_recoded(cfg);
        tfg::Word w = parse_plain_word(*rec, cfg.word_text, true);
        std::cout << (tfg::membership_via_identity(rec, w) ? "true" : "false") << "\n";
      } else {
        tfg::OraclePtr sys = cfg.recoded ? tfg::OraclePtr(load_recoded(cfg))
                                         : tfg::OraclePtr(load_system(cfg));
        tfg::Word w = parse_plain_word(*sys, cfg.word_text, cfg.recoded);
        std::cout << (sys->contains(w) ? "true" : "false") << "\n";
      }
    } else if (cmd_returns->parsed()) {
      tfg::OraclePtr sys = cfg.recoded ? tfg::OraclePtr(load_recoded(cfg))
                                       : tfg::OraclePtr(load_system(cfg));
      tfg::Word u = parse_plain_word(*sys, cfg.u_text, cfg.recoded);
      tfg::Word v = parse_plain_word(*sys, cfg.v_text, cfg.recoded);
      for (const tfg::Word& r : tfg::return_words(*sys, u, v)) {
        std::cout << sys->render_word(r) << "\n";
      }
    } else if (cmd_kr->parsed()) {
      auto base_sys = load_system(cfg);
      auto base_point = tfg::SubstitutionPoint::create(base_sys, parse_seed(*base_sys, cfg.seed_point_text));
      std::shared_ptr<const tfg::OrbitPoint> point = base_point;
      tfg::OraclePtr sys = base_sys;
      if (cfg.recoded) {
        auto rec = tfg::RecodedSystem::create(base_sys, cfg.ceiling);
        point = tfg::RecodedPoint::create(rec, base_point);
        sys = rec;
      }
      tfg::KRPartition p = tfg::kr_partition(*point, cfg.level);
      int radius = 1;
      for (size_t t = 0; t < p.towers.size(); ++t) {
        for (int i = 0; i < p.towers[t].height; ++i) {
          radius = std::max(radius, p.atom(static_cast<int>(t), i).min_radius());
        }
      }
      std::cout << "level=" << p.level << " u=" << sys->render_word(p.u)
                << " v=" << sys->render_word(p.v) << " radius=" << radius << "\n";
      for (const tfg::Tower& t : p.towers) {
        std::cout << "r=" << sys->render_word(t.return_word) << " height=" << t.height
                  << " base_members=" << tfg::to_clopen(sys, t.base, radius).members().size()
                  << "\n";
      }
    } else if (cmd_sigma->parsed() || cmd_wp->parsed()) {
      auto rec = load_recoded(cfg);
      tfg::GroupElement g = tfg::evaluate_word(rec, read_generator_word(cfg));
      if (cmd_wp->parsed()) {
        std::cout << (g.is_identity() ? "identity" : "non-identity") << "\n";
      } else if (g.is_identity()) {
        std::cout << "identity\n";
      } else {
        std::cout << "radius=" << g.radius() << "\n";
        for (const auto& [z, f] : g.cocycle()) {
          std::cout << z.render('-') << " -> " << f << "\n";
        }
      }
    } else if (cmd_rel->parsed() || cmd_verify->parsed()) {
      auto rec = load_recoded(cfg);
      tfg::PresentationBounds bounds{cfg.max_word_len, cfg.depth, cfg.offset_min, cfg.offset_max};
      tfg::Presentation p = tfg::enumerate_relators(rec, bounds);
      if (cmd_rel->parsed()) {
        write_output(cfg, tfg::export_presentation(p, cfg.system_file));
      } else {
        tfg::VerifyReport report = tfg::verify_relators(p);
        std::cout << "relators=" << report.checked << "\n";
        for (const std::string& f : report.failures) std::cout << "FAIL " << f << "\n";
        std::cout << (report.ok() ? "all relators evaluate to the identity"
                                  : "relator verification FAILED")
                  << "\n";
        if (!report.ok()) return 1;
      }
    } else if (cmd_tietze->parsed()) {
      auto rec = load_recoded(cfg);
      tfg::Word w = parse_plain_word(*rec, cfg.word_text, true);
      tfg::FreeWord fw = tfg::tietze_expand(rec, w, cfg.tietze_k);
      const auto& gens = rec->factors(3);
      std::string out;
      for (size_t i = 0; i < fw.size(); ++i) {
        if (i) out += ' ';
        out += tfg::GeneratorSymbol{{gens[static_cast<size_t>(fw[i].gen)], 1}, fw[i].exp}.token();
      }
      std::cout << out << "\n";
    } else if (cmd_fact->parsed()) {
      auto base_sys = load_system(cfg);
      if (cfg.seed_point2_text.empty()) throw CLI::ValidationError("factorize needs --seed-point2");
      auto rec = tfg::RecodedSystem::create(base_sys, cfg.ceiling);
      auto p1 = tfg::RecodedPoint::create(
          rec, tfg::SubstitutionPoint::create(base_sys, parse_seed(*base_sys, cfg.seed_point_text)));
      auto p2 = tfg::RecodedPoint::create(
          rec, tfg::SubstitutionPoint::create(base_sys, parse_seed(*base_sys, cfg.seed_point2_text)));
      tfg::Factorization f =
          tfg::factor_product(read_generator_word(cfg), *p1, *p2, std::max(cfg.ceiling, 64));
      std::cout << "level=" << f.level << "\n";
      std::cout << "P: " << tfg::render_generator_word(f.p_word) << "\n";
      std::cout << "Q: " << tfg::render_generator_word(f.q_word) << "\n";
    } else if (cmd_alt->parsed()) {
      bool ok = tfg::alt_presentation_check(cfg.alt_n);
      std::cout << "order=" << tfg::alt_group_order(cfg.alt_n) << " ok=" << (ok ? "true" : "false")
                << "\n";
      if (!ok) return 1;
    }
  } catch (const tfg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
