#include "howson/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "howson/certificate.hpp"
#include "howson/constructions.hpp"
#include "howson/errors.hpp"
#include "howson/hnn.hpp"
#include "howson/instance.hpp"

namespace howson::cli {

  namespace {

    namespace fs = std::filesystem;
    using ojson  = nlohmann::ordered_json;

    struct Config {
      std::string              spec;
      std::string              expression;
      std::string              path;
      std::optional<std::string> element;
      std::size_t              depth       = 6;
      std::uint64_t            seed        = 1;
      bool                     single      = false;
      bool                     full        = false;
      std::size_t              depth_limit = default_depth_limit;
      std::string              out;
      std::string              format;
    };

    std::string read_file(fs::path const& p) {
      std::ifstream in(p, std::ios::binary);
      if (!in) {
        throw ParseError("cannot read " + p.string());
      }
      std::ostringstream s;
      s << in.rdbuf();
      return s.str();
    }

    // A spec argument names a file when one exists at that path.
    std::string spec_text(std::string const& arg) {
      std::error_code ec;
      if (fs::is_regular_file(arg, ec)) {
        return read_file(arg);
      }
      return arg;
    }

    void write_atomically(std::string const& path, std::string const& text) {
      fs::path target(path);
      fs::path temp = target;
      temp += ".tmp";
      {
        std::ofstream f(temp, std::ios::binary | std::ios::trunc);
        if (!f) {
          throw ParseError("cannot write " + temp.string());
        }
        f << text;
        if (!f.flush()) {
          throw ParseError("cannot write " + temp.string());
        }
      }
      fs::rename(temp, target);
    }

    void emit(Config const& c, std::string const& text, std::ostream& out) {
      if (c.out.empty()) {
        out << text;
      } else {
        write_atomically(c.out, text);
      }
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    CertifyOptions options_from(Config const& c) {
      CertifyOptions o;
      o.depth       = c.depth;
      o.seed        = c.seed;
      o.depth_limit = c.depth_limit;
      o.complement  = c.full ? ComplementSize::full : ComplementSize::single;
      return o;
    }

    FreeEndo free_endo_from(Instance const& instance) {
      if (auto f = std::get_if<FreeBase>(&instance)) {
        return f->endo();
      }
      throw NotApplicableError("a free base group endomorphism is required");
    }

    int analyze(Config const& c, std::ostream& out) {
      auto instance = parse_instance(spec_text(c.spec));
      ojson j;
      j["seed"] = c.seed;
      std::optional<std::string> problem;
      if (auto f = std::get_if<FreeBase>(&instance)) {
        auto const& e     = f->endo();
        auto        index = e.image_graph().index();
        j["endo"]         = to_string(e);
        j["rank"]         = e.rank();
        j["injective"]    = e.is_injective();
        j["surjective"]   = e.is_surjective();
        j["image_rank"]   = e.image_graph().rank();
        j["image_index"]  = index ? ojson(*index) : ojson("infinite");
        if (e.rank() < 2) {
          problem = "base group is cyclic";
        } else if (!e.is_injective()) {
          problem = "endomorphism is not injective";
        } else if (e.is_surjective()) {
          problem = "endomorphism is surjective";
        }
      } else {
        auto classify = [&](auto const& base, std::string const& label) {
          ojson f;
          f["endo"] = base.spec();
          if constexpr (std::is_same_v<std::decay_t<decltype(base)>, FreeBase>) {
            f["injective"]  = base.endo().is_injective();
            f["surjective"] = base.endo().is_surjective();
          } else {
            auto k          = ab_classify(base.endo());
            f["injective"]  = k.injective;
            f["surjective"] = k.surjective;
            f["determinant"] = base.endo().determinant();
          }
          if (!f["injective"].get<bool>() && !problem) {
            problem = label + " endomorphism is not injective";
          } else if (f["surjective"].get<bool>() && !problem) {
            problem = label + " endomorphism is surjective";
          }
          return f;
        };
        if (auto p = std::get_if<ProductInstance>(&instance)) {
          std::visit([&](auto const& a) { j["A"] = classify(a, "A"); }, p->a);
          std::visit([&](auto const& b) { j["B"] = classify(b, "B"); }, p->b);
        } else {
          j["factor"] = classify(std::get<AbelianBase>(instance), "matrix");
          problem.reset();
        }
      }
      if (!std::holds_alternative<AbelianBase>(instance)) {
        j["applicable"] = !problem;
        if (problem) {
          j["reason"] = *problem;
        }
      }

      if (c.format == "table") {
        auto print = [&](ojson const& o, std::string const& prefix) {
          for (auto const& [key, value] : o.items()) {
            if (value.is_object()) {
              continue;
            }
            std::string v = value.is_boolean() ? yes_no(value.get<bool>())
                            : value.is_string() ? value.get<std::string>()
                                                : value.dump();
            out << prefix << key << "=" << v << "\n";
          }
        };
        print(j, "");
        for (auto const& key : {"A", "B", "factor"}) {
          if (j.contains(key)) {
            print(j[key], std::string(key) + ".");
          }
        }
      } else {
        out << j.dump(2) << "\n";
      }
      return problem ? not_applicable : ok;
    }

    int certify(Config const& c, std::ostream& out) {
      auto e    = free_endo_from(parse_instance(spec_text(c.spec)));
      auto cert = certify_theorem2(e, options_from(c));
      if (c.format == "table") {
        std::ostringstream s;
        s << "endo: " << cert.endo << "\nK: ";
        for (auto const& k : cert.complement) {
          s << k << " ";
        }
        s << "\n" << std::setw(3) << "r" << std::setw(6) << "rank"
          << "  generators\n";
        for (auto const& level : cert.levels) {
          s << std::setw(3) << level.r << std::setw(6) << level.rank << " ";
          for (auto const& g : level.generators) {
            s << " " << g.base_expr << " = " << g.f_expr;
          }
          s << "\n";
        }
        for (auto const& o : cert.obligations) {
          s << (o.holds ? "ok   " : "FAIL ") << o.name << ": " << o.detail << "\n";
        }
        emit(c, s.str(), out);
      } else {
        emit(c, dump_certificate(cert), out);
      }
      return ok;
    }

    int certify3(Config const& c, std::ostream& out) {
      auto instance = parse_instance(spec_text(c.spec));
      auto product  = std::get_if<ProductInstance>(&instance);
      if (!product) {
        throw NotApplicableError("a product base group A × B is required");
      }
      auto cert = certify_theorem3(*product, c.element, options_from(c));
      if (c.format == "table") {
        std::ostringstream s;
        s << "endo: " << cert.endo << "\nb: " << cert.element << "\n";
        for (auto const& l : cert.levels) {
          s << "(tb)^" << l.m << " = " << l.normal_form << "\n";
        }
        for (auto const& o : cert.obligations) {
          s << (o.holds ? "ok   " : "FAIL ") << o.name << ": " << o.detail << "\n";
        }
        emit(c, s.str(), out);
      } else {
        emit(c, dump_certificate(cert), out);
      }
      return ok;
    }

    int verify(Config const& c, std::ostream& out, std::ostream& err) {
      std::error_code ec;
      if (!fs::is_regular_file(c.path, ec)) {
        throw ParseError("no certificate file at " + c.path);
      }
      auto verdict = verify_certificate(parse_certificate(read_file(c.path)));
      if (!verdict.ok) {
        err << "verification failed: " << verdict.failure << "\n";
        return verification_failed;
      }
      out << "verified\n";
      return ok;
    }

    int normal_form(Config const& c, std::ostream& out) {
      auto instance = parse_instance(spec_text(c.spec));
      return with_base(instance, [&](auto const& base) {
        HnnExtension hnn(base, c.depth_limit);
        auto         x = hnn.parse(c.expression);
        if (c.format == "json") {
          ojson j;
          j["m"]       = x.m;
          j["g"]       = hnn.format_base(x.g);
          j["n"]       = x.n;
          j["in_base"] = hnn.in_base(x);
          out << j.dump() << "\n";
        } else {
          out << hnn.format(x) << " in_base=" << (hnn.in_base(x) ? "true" : "false")
              << "\n";
        }
        return ok;
      });
    }

    int rank_table(Config const& c, std::ostream& out) {
      auto e = free_endo_from(parse_instance(spec_text(c.spec)));
      if (e.rank() < 2 || !e.is_injective() || e.is_surjective()) {
        throw NotApplicableError(
            "rank growth needs an injective, non-surjective endomorphism of a "
            "non-cyclic free group");
      }
      auto k     = hall_complement(e.image_graph(), options_from(c).complement);
      auto ranks = rank_growth(e, k, c.depth, c.depth_limit);
      if (c.format == "table") {
        std::ostringstream s;
        s << std::setw(3) << "r" << std::setw(6) << "rank" << "\n";
        for (std::size_t r = 0; r < ranks.size(); ++r) {
          s << std::setw(3) << r << std::setw(6) << ranks[r] << "\n";
        }
        emit(c, s.str(), out);
      } else {
        ojson j;
        j["endo"] = to_string(e);
        std::vector<std::string> words;
        for (auto const& w : k) {
          words.push_back(to_string(w));
        }
        j["complement"] = words;
        j["seed"]       = c.seed;
        j["ranks"]      = ranks;
        emit(c, j.dump(2) + "\n", out);
      }
      return ok;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certificates that descending HNN-extensions are not Howson groups",
                 "howson"};
    app.require_subcommand(1);
    Config c;

    auto add_format = [&](CLI::App* sub) {
      sub->add_option("--format", c.format, "Output format")
          ->check(CLI::IsMember({"json", "table"}));
    };
    auto add_depth = [&](CLI::App* sub) {
      sub->add_option("--rmax,--depth", c.depth, "Deepest level r");
      sub->add_option("--depth-limit", c.depth_limit,
                      "Endomorphism applications allowed per operation");
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "Classify an endomorphism");
    analyze_cmd->add_option("spec", c.spec, "Endomorphism spec or file")->required();
    analyze_cmd->add_option("--seed", c.seed, "Recorded seed");
    analyze_cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));

    auto* certify_cmd = app.add_subcommand("certify", "Build a free-base certificate");
    certify_cmd->add_option("spec", c.spec, "Endomorphism spec or file")->required();
    add_depth(certify_cmd);
    certify_cmd->add_option("--seed", c.seed, "Sampling seed");
    auto* single = certify_cmd->add_flag("--single", c.single,
                                         "Shortest single-word complement (default)");
    certify_cmd->add_flag("--full-complement", c.full, "Use the whole Hall complement")
        ->excludes(single);
    certify_cmd->add_option("--out", c.out, "Output path");
    add_format(certify_cmd);

    auto* certify3_cmd
        = app.add_subcommand("certify3", "Build a certificate for a product base A × B");
    certify3_cmd->add_option("spec", c.spec, "Product spec or file")->required();
    certify3_cmd->add_option("--element,-b", c.element, "Element b of B outside Bφ");
    add_depth(certify3_cmd);
    certify3_cmd->add_option("--seed", c.seed, "Recorded seed");
    certify3_cmd->add_option("--out", c.out, "Output path");
    add_format(certify3_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Re-check a certificate");
    verify_cmd->add_option("certificate", c.path, "Certificate file")->required();

    auto* nf_cmd = app.add_subcommand("nf", "Normal form (m, g, n) of an element");
    nf_cmd->add_option("spec", c.spec, "Instance spec or file")->required();
    nf_cmd->add_option("expression", c.expression, "Word over t and base generators")
        ->required();
    nf_cmd->add_option("--depth-limit", c.depth_limit,
                       "Endomorphism applications allowed per operation");
    nf_cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));

    auto* rank_cmd = app.add_subcommand("rank-growth", "Ranks of M_0, ..., M_r");
    rank_cmd->add_option("spec", c.spec, "Endomorphism spec or file")->required();
    add_depth(rank_cmd);
    rank_cmd->add_option("--seed", c.seed, "Recorded seed");
    auto* rank_single = rank_cmd->add_flag("--single", c.single,
                                           "Shortest single-word complement (default)");
    rank_cmd->add_flag("--full-complement", c.full, "Use the whole Hall complement")
        ->excludes(rank_single);
    rank_cmd->add_option("--out", c.out, "Output path");
    rank_cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));

    std::vector<std::string> argv_store{"howson"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char const*> argv;
    for (auto const& a : argv_store) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? ok : input_error;
    }

    if (c.format.empty()) {
      c.format = certify_cmd->parsed() || certify3_cmd->parsed() ? "json" : "table";
    }
    try {
      if (analyze_cmd->parsed()) {
        return analyze(c, out);
      }
      if (certify_cmd->parsed()) {
        return certify(c, out);
      }
      if (certify3_cmd->parsed()) {
        return certify3(c, out);
      }
      if (verify_cmd->parsed()) {
        return verify(c, out, err);
      }
      if (nf_cmd->parsed()) {
        return normal_form(c, out);
      }
      return rank_table(c, out);
    } catch (NotApplicableError const& e) {
      err << "not applicable: " << e.what() << "\n";
      return not_applicable;
    } catch (DepthLimitError const& e) {
      err << "depth limit: " << e.what() << "\n";
      return depth_limit;
    } catch (ParseError const& e) {
      err << "input error: " << e.what() << "\n";
      return input_error;
    } catch (AlphabetError const& e) {
      err << "input error: " << e.what() << "\n";
      return input_error;
    } catch (InvalidWitnessError const& e) {
      err << "input error: " << e.what() << "\n";
      return input_error;
    } catch (std::exception const& e) {
      err << "construction failed: " << e.what() << "\n";
      return construction_failed;
    }
  }

}  // namespace howson::cli
