#include "kzero/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "kzero/class_poly.hpp"
#include "kzero/class_series.hpp"
#include "kzero/errors.hpp"
#include "kzero/permgrp.hpp"
#include "kzero/polyhedral.hpp"
#include "kzero/posets.hpp"
#include "kzero/quotients.hpp"
#include "kzero/simplicial.hpp"
#include "kzero/text_formats.hpp"
#include "kzero/zerocycles.hpp"

namespace kzero::cli {

namespace {

struct Options {
  std::vector<std::string> complexes;
  std::vector<std::string> component_classes;
  std::string x_text = "x";
  std::string a_text = "1";
  unsigned n = 0;
  unsigned m = 0;
  int d = 0;
  unsigned order = 8;
  std::optional<unsigned> manifold_dim;
  std::string group_path;
  std::string space_path;
  std::string descriptor_path;
  std::string expr;
  std::vector<std::string> at;
  bool latex = false;
  bool show_poset = false;
  bool table = false;
  bool closed = false;
  bool show_routes = false;
};

class Printer {
 public:
  Printer(std::ostream& out, bool latex) : out_(out), latex_(latex) {}
  void poly(const ClassPoly& p) { out_ << (latex_ ? to_latex(p) : to_string(p)) << '\n'; }
  void series(const ClassSeries& s) { out_ << (latex_ ? to_latex(s) : to_string(s)) << '\n'; }
  void rational(const Rational& q) { out_ << (latex_ ? rational_to_latex(q) : rational_to_string(q)) << '\n'; }

 private:
  std::ostream& out_;
  bool latex_;
};

Integer integer_class(const ClassPoly& p, std::string_view flag) {
  if (!p.is_constant() || p.constant_value()->get_den() != 1) {
    throw Error(Errc::invalid_argument, std::string(flag) + " must be an integer here, got " + to_string(p));
  }
  return p.constant_value()->get_num();
}

std::pair<std::string, Integer> parse_assignment(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw Error(Errc::parse_error, "--at expects var=int, got '" + text + "'");
  ClassPoly value = parse_class_poly(text.substr(eq + 1));
  if (!value.is_constant() || value.constant_value()->get_den() != 1) {
    throw Error(Errc::parse_error, "--at value must be an integer, got '" + text.substr(eq + 1) + "'");
  }
  return {text.substr(0, eq), value.constant_value()->get_num()};
}

CLI::App* add_class_flags(CLI::App* sub, Options& o, bool with_a) {
  sub->add_option("--X", o.x_text, "class of X: a polynomial or an integer")->capture_default_str();
  if (with_a) sub->add_option("--A", o.a_text, "class of A: a polynomial or an integer")->capture_default_str();
  sub->add_flag("--latex", o.latex, "render as LaTeX");
  return sub;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Grothendieck classes of polyhedral products, quotients and spaces of 0-cycles", "kzero"};
  app.require_subcommand(1);
  Options o;

  auto* polyprod = add_class_flags(app.add_subcommand("polyprod", "class of the polyhedral product (X,A)^K"), o, true);
  polyprod->add_option("--complex", o.complexes, "complex file")->required()->expected(1);

  auto* complement =
      add_class_flags(app.add_subcommand("complement", "class of X^n minus the polyhedral product"), o, true);
  complement->add_option("--complex", o.complexes, "complex file")->required()->expected(1);
  complement->add_flag("--show-poset", o.show_poset, "print the intersection poset first");

  auto* fatwedge = add_class_flags(app.add_subcommand("fatwedge", "class of the fat wedge W_d(X,n)"), o, false);
  fatwedge->add_option("--n", o.n, "number of factors")->required();
  fatwedge->add_option("--d", o.d, "minimum number of basepoint entries")->required();

  auto* config = add_class_flags(app.add_subcommand("config", "class of the diagonal arrangement Delta_K(X)"), o, false);
  config->add_option("--complex", o.complexes, "complex file; repeat for a disjoint union")->required();
  config->add_option("--component-class", o.component_classes,
                     "precomputed class per component, or 'auto'; repeat once per --complex");

  auto* config_complement = add_class_flags(
      app.add_subcommand("config-complement", "class of M(K,X), the complement of Delta_K(X)"), o, false);
  config_complement->add_option("--complex", o.complexes, "complex file")->required()->expected(1);
  config_complement->add_flag("--show-poset", o.show_poset, "print the intersection poset first");
  config_complement->add_option("--manifold-dim", o.manifold_dim,
                                "X is a closed manifold of this dimension with Euler characteristic --X");

  auto* permprod = add_class_flags(app.add_subcommand("permprod", "class of the permutation product X^n/G"), o, false);
  permprod->add_option("--group", o.group_path, "group file")->required();

  auto* cycprod = add_class_flags(app.add_subcommand("cycprod", "class of the cyclic product CP^n(X)"), o, false);
  cycprod->add_option("--n", o.n, "number of factors")->required()->check(CLI::PositiveNumber);

  auto* symprod =
      add_class_flags(app.add_subcommand("symprod-series", "MacDonald series sum_d [SP^d(X)] x^d"), o, false);
  symprod->add_option("--order", o.order, "truncation order")->capture_default_str();

  auto* zerocycles =
      add_class_flags(app.add_subcommand("zerocycles", "generating series of the spaces of 0-cycles"), o, false);
  zerocycles->add_option("--m", o.m, "number of colors")->required()->check(CLI::PositiveNumber);
  zerocycles->add_option("--n", o.n, "forbidden multiplicity")->required()->check(CLI::PositiveNumber);
  zerocycles->add_option("--order", o.order, "truncation order")->capture_default_str();
  zerocycles->add_flag("--table", o.table, "print every multi-degree class");
  zerocycles->add_flag("--closed", o.closed, "use the closed form instead of the recursion");

  auto* ratio = add_class_flags(
      app.add_subcommand("ratio", "0-cycle series divided by the m-th power of the MacDonald series"), o, false);
  ratio->add_option("--m", o.m, "number of colors")->required()->check(CLI::PositiveNumber);
  ratio->add_option("--n", o.n, "forbidden multiplicity")->required()->check(CLI::PositiveNumber);
  ratio->add_option("--order", o.order, "truncation order")->capture_default_str();

  auto* quotient = app.add_subcommand("quotient", "class of X/G for a finite stratified action");
  quotient->add_option("--space", o.space_path, "space file")->required();
  quotient->add_flag("--latex", o.latex, "render as LaTeX");
  quotient->add_flag("--show-routes", o.show_routes, "print the orbit, Burnside and centralizer sums");

  auto* qdesc = app.add_subcommand("quotient-descriptor", "quotient class from centralizer data");
  qdesc->add_option("--descriptor", o.descriptor_path, "descriptor file")->required();
  qdesc->add_flag("--latex", o.latex, "render as LaTeX");

  auto* orbifold = app.add_subcommand("orbifold-euler", "sum of orbifold Euler characteristics of fixed sets");
  orbifold->add_option("--descriptor", o.descriptor_path, "orbifold cell file")->required();
  orbifold->add_flag("--latex", o.latex, "render as LaTeX");

  auto* crystal = app.add_subcommand("crystal", "Euler characteristic of R^n / Gamma");
  crystal->add_option("--descriptor", o.descriptor_path, "central isometry class file")->required();
  crystal->add_flag("--latex", o.latex, "render as LaTeX");

  auto* fixed_point = app.add_subcommand("fixed-point", "does an affine map have exactly one fixed point");
  fixed_point->add_option("--descriptor", o.descriptor_path, "affine map file")->required();

  auto* eval_cmd = app.add_subcommand("eval", "canonical form of a class polynomial, optionally evaluated");
  eval_cmd->add_option("expr", o.expr, "polynomial")->required();
  eval_cmd->add_option("--at", o.at, "var=int assignment; repeatable");
  eval_cmd->add_flag("--latex", o.latex, "render as LaTeX");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_parse_error;
  }

  Printer print(out, o.latex);
  try {
    auto x_class = [&] { return parse_class_poly(o.x_text); };
    auto load_complex = [&] { return read_complex_file(o.complexes.front()); };

    if (polyprod->parsed()) {
      auto k = load_complex();
      print.poly(polyhedral_product_class(k, {x_class(), parse_class_poly(o.a_text)}));
    } else if (complement->parsed()) {
      auto k = load_complex();
      if (o.show_poset) out << format_poset(build_intersection_poset(k));
      print.poly(polyhedral_product_complement_class(k, {x_class(), parse_class_poly(o.a_text)}));
    } else if (fatwedge->parsed()) {
      print.poly(fat_wedge_class(o.n, o.d, x_class()));
    } else if (config->parsed()) {
      std::vector<SimplicialComplex> ks;
      for (const auto& path : o.complexes) ks.push_back(read_complex_file(path));
      if (!o.component_classes.empty() && o.component_classes.size() != ks.size()) {
        throw Error(Errc::invalid_argument, "--component-class must be given once per --complex");
      }
      if (ks.size() == 1) {
        bool given = !o.component_classes.empty() && o.component_classes.front() != "auto";
        print.poly(given ? parse_class_poly(o.component_classes.front()) : delta_config_class(ks.front(), x_class()));
      } else {
        std::vector<ArrangementComponent> parts;
        for (std::size_t i = 0; i < ks.size(); ++i) {
          ArrangementComponent c{ks[i], std::nullopt};
          if (!o.component_classes.empty() && o.component_classes[i] != "auto") {
            c.delta_class = parse_class_poly(o.component_classes[i]);
          }
          parts.push_back(std::move(c));
        }
        print.poly(delta_config_class_disjoint(parts, x_class()));
      }
    } else if (config_complement->parsed()) {
      auto k = load_complex();
      if (o.show_poset) out << format_poset(build_intersection_poset(k));
      if (o.manifold_dim) {
        print.rational(chi_complement_manifold(k, integer_class(x_class(), "--X"), *o.manifold_dim));
      } else {
        print.poly(m_complement_class(k, x_class()));
      }
    } else if (permprod->parsed()) {
      print.poly(permutation_product_class(read_group_file(o.group_path), x_class()));
    } else if (cycprod->parsed()) {
      print.poly(cyclic_product_class(o.n, x_class()));
    } else if (symprod->parsed()) {
      print.series(macdonald_series(x_class(), o.order));
    } else if (zerocycles->parsed()) {
      auto p = x_class();
      if (o.table) {
        out << format_table(z_table(o.m, o.n, p, o.order), o.latex);
      } else if (o.closed) {
        print.series(z_series_closed(o.m, o.n, p, o.order));
      } else {
        print.series(z_series_from_table(z_table(o.m, o.n, p, o.order), o.order));
      }
    } else if (ratio->parsed()) {
      print.series(fww_ratio(o.m, o.n, x_class(), o.order));
    } else if (quotient->parsed()) {
      auto sp = read_space_file(o.space_path);
      ClassPoly orbits = orbit_sum_class(sp);
      ClassPoly burnside = burnside_check_class(sp);
      ClassPoly centralizers = mainaction_class_finite(sp);
      if (o.show_routes) {
        out << "orbits: " << to_string(orbits) << '\n';
        out << "burnside: " << to_string(burnside) << '\n';
        out << "centralizers: " << to_string(centralizers) << '\n';
      }
      if (orbits != burnside || orbits != centralizers) {
        throw Error(Errc::invalid_argument, "quotient routes disagree; the action is not stratified");
      }
      print.poly(orbits);
    } else if (qdesc->parsed()) {
      print.poly(mainaction_class_descriptor(read_descriptor_file(o.descriptor_path)));
    } else if (orbifold->parsed()) {
      std::vector<std::vector<OrbifoldCell>> per_element;
      for (auto& e : read_orbifold_cells_file(o.descriptor_path)) per_element.push_back(std::move(e.cells));
      print.rational(akita_chi(per_element));
    } else if (crystal->parsed()) {
      auto result = crystal_chi(read_crystal_file(o.descriptor_path));
      if (result.warning) err << "warning: " << *result.warning << '\n';
      print.rational(result.chi);
    } else if (fixed_point->parsed()) {
      out << (has_unique_fixed_point(read_affine_map_file(o.descriptor_path)) ? "true" : "false") << '\n';
    } else if (eval_cmd->parsed()) {
      ClassPoly p = parse_class_poly(o.expr);
      for (const auto& text : o.at) {
        auto [name, value] = parse_assignment(text);
        p = substitute(p, name, ClassPoly::constant(Rational(value)));
      }
      print.poly(p);
    }
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return e.is_parse_error() ? exit_parse_error : exit_precondition;
  }
  return exit_ok;
}

}  // namespace kzero::cli
