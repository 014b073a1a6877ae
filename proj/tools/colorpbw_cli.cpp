// Command-line front end: load algebra definitions, run the axiom
// verifiers, compute PBW normal forms and products, run the decomposition
// suite, and emit spec files for the superalgebra specialisation.
//
// Exit codes: 0 pass, 1 violation, 2 parse error, 3 resource cap.

#include <CLI11.hpp>
#include <colorpbw/colorpbw.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct LoadedAlgebra {
  colorpbw::AlgebraSpec spec;
  colorpbw::ColorHomLieAlgebra algebra;
};

LoadedAlgebra load_algebra(const std::string& path) {
  LoadedAlgebra out;
  out.spec = colorpbw::parse_algebra_spec(read_file(path));
  out.algebra = out.spec.to_algebra();
  return out;
}

colorpbw::OutputFormat parse_format(const std::string& f) {
  return f == "structured" ? colorpbw::OutputFormat::structured : colorpbw::OutputFormat::text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact PBW calculator for involutive color hom-Lie algebras"};
  app.require_subcommand(1);

  std::string spec_path, elem_path, elem_b_path, out_path, format = "text";
  std::string strategy = "leftmost", mu_str;
  std::size_t max_len = 3, words = 500;
  std::uint64_t seed = 12345;

  auto* verify = app.add_subcommand("verify", "run the axiom verifiers on an algebra file");
  verify->add_option("spec", spec_path)->required();
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

  auto* normalize = app.add_subcommand("normalize", "PBW normal form of an element");
  normalize->add_option("spec", spec_path)->required();
  normalize->add_option("element", elem_path)->required();
  normalize->add_option("--strategy", strategy)->check(CLI::IsMember({"leftmost", "rightmost"}));
  normalize->add_option("--mu", mu_str, "override the straightening parameter (exact rational)");
  normalize->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

  auto* multiply = app.add_subcommand("multiply", "product of two classes in U(g)");
  multiply->add_option("spec", spec_path)->required();
  multiply->add_option("elementA", elem_path)->required();
  multiply->add_option("elementB", elem_b_path)->required();
  multiply->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

  auto* pbw = app.add_subcommand("pbw-check", "decomposition oracle, psi check, confluence");
  pbw->add_option("spec", spec_path)->required();
  pbw->add_option("--max-len", max_len)->check(CLI::Range(std::size_t{2}, std::size_t{6}));
  pbw->add_option("--mu", mu_str, "run the oracle at this rational mu");
  pbw->add_option("--seed", seed);
  pbw->add_option("--words", words, "confluence sample size");

  std::vector<std::string> preset_names, preset_brackets, preset_alphas;
  std::vector<int> preset_parities;
  auto* preset = app.add_subcommand("super-preset", "emit a Z_2-graded algebra file");
  preset->add_option("--names", preset_names)->required()->delimiter(',');
  preset->add_option("--parities", preset_parities)->required()->delimiter(',');
  preset->add_option("--bracket", preset_brackets, "e.g. \"x y = z 1\"");
  preset->add_option("--alpha", preset_alphas, "e.g. \"x = x -1\" (default id)");
  preset->add_option("-o,--output", out_path, "write to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      LoadedAlgebra la = load_algebra(spec_path);
      colorpbw::VerificationReport report = colorpbw::verify_algebra(la.algebra);
      std::cout << colorpbw::format_report(report, parse_format(format));
      return report.ok() ? kExitOk : kExitViolation;
    }

    if (normalize->parsed()) {
      LoadedAlgebra la = load_algebra(spec_path);
      colorpbw::TensorElement elem = colorpbw::parse_element_file(
          read_file(elem_path), la.algebra.basis, la.algebra.epsilon.group().field());
      colorpbw::UEAContext ctx = colorpbw::build_alpha_stable_basis(la.algebra);
      colorpbw::Strategy strat = strategy == "rightmost" ? colorpbw::Strategy::rightmost
                                                         : colorpbw::Strategy::leftmost;
      colorpbw::TensorElement x = colorpbw::to_x_coordinates(ctx, elem);
      colorpbw::NormalForm nf;
      if (mu_str.empty()) {
        nf = colorpbw::normal_form(ctx, x, strat);
      } else {
        colorpbw::Scalar mu =
            colorpbw::parse_scalar(mu_str, la.algebra.epsilon.group().field());
        nf = colorpbw::normal_form(ctx, x, strat, mu);
      }
      std::cout << colorpbw::format_normal_form(ctx, nf, parse_format(format));
      return kExitOk;
    }

    if (multiply->parsed()) {
      LoadedAlgebra la = load_algebra(spec_path);
      const auto field = la.algebra.epsilon.group().field();
      colorpbw::TensorElement ea =
          colorpbw::parse_element_file(read_file(elem_path), la.algebra.basis, field);
      colorpbw::TensorElement eb =
          colorpbw::parse_element_file(read_file(elem_b_path), la.algebra.basis, field);
      colorpbw::UEAContext ctx = colorpbw::build_alpha_stable_basis(la.algebra);
      colorpbw::NormalForm u = colorpbw::normal_form(ctx, colorpbw::to_x_coordinates(ctx, ea));
      colorpbw::NormalForm v = colorpbw::normal_form(ctx, colorpbw::to_x_coordinates(ctx, eb));
      colorpbw::NormalForm prod = colorpbw::uea_multiply(ctx, u, v);
      std::cout << colorpbw::format_normal_form(ctx, prod, parse_format(format));
      return kExitOk;
    }

    if (pbw->parsed()) {
      LoadedAlgebra la = load_algebra(spec_path);
      colorpbw::VerificationReport axioms = colorpbw::verify_algebra(la.algebra);
      if (!axioms.ok()) {
        axioms.print(std::cout);
        return kExitViolation;
      }
      colorpbw::Scalar mu(0);
      bool has_mu = !mu_str.empty();
      if (has_mu) mu = colorpbw::parse_scalar(mu_str, la.algebra.epsilon.group().field());
      auto t0 = std::chrono::steady_clock::now();
      colorpbw::PbwCheckResult res =
          colorpbw::run_pbw_check(la.algebra, max_len, mu, has_mu, words, seed);
      auto t1 = std::chrono::steady_clock::now();
      std::cout << res.report;
      std::cerr << "elapsed: "
                << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                << " ms\n";
      if (res.capped) return kExitResource;
      return res.pass ? kExitOk : kExitViolation;
    }

    if (preset->parsed()) {
      colorpbw::AlgebraSpec spec = colorpbw::super_preset(preset_names, preset_parities,
                                                          preset_brackets, preset_alphas);
      std::string text = colorpbw::print_algebra_spec(spec);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << text;
      }
      return kExitOk;
    }
  } catch (const colorpbw::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const colorpbw::ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const colorpbw::BasisConstructionError& e) {
    std::cerr << "basis construction failed: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
