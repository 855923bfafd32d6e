#include "quivermod/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <sstream>

#include "quivermod/clifford.hpp"
#include "quivermod/kronecker.hpp"
#include "quivermod/models.hpp"
#include "quivermod/number_theory.hpp"
#include "quivermod/stability.hpp"

namespace quivermod::cli {

namespace {

void emit(std::ostream& out, std::initializer_list<std::string> fields) {
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out << '\t';
    out << f;
    first = false;
  }
  out << '\n';
}

template <class Range>
void emit_row(std::ostream& out, const std::string& key, const Range& values) {
  out << key;
  for (const auto& v : values) out << '\t' << to_string(v);
  out << '\n';
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Quiver load_quiver(const std::string& spec) {
  auto shorthand = [&](std::string_view prefix) -> std::optional<std::int64_t> {
    if (spec.rfind(prefix, 0) != 0) return std::nullopt;
    const auto v = parse_int_list(std::string_view(spec).substr(prefix.size()));
    if (v.size() != 1) throw InputError("expected one arrow count in " + spec);
    return v.front();
  };
  if (auto m = shorthand("loop:")) return Quiver::loop(*m);
  if (auto m = shorthand("kronecker:")) return Quiver::kronecker(*m);
  std::ifstream in(spec);
  if (!in) throw InputError("cannot open quiver file " + spec);
  return parse_quiver(in);
}

struct Inputs {
  std::string quiver, theta, d, e, n;
  std::size_t max_parts = 0;
  std::int64_t m_max = 0, d_max = 0;
  int threads = 0;
  bool serial = false;
  std::string a, b, c, v;
  std::string bmatrix;
  std::uint64_t characteristic = 0;
  std::vector<std::string> positional;
};

using Action = std::function<int(std::ostream&)>;

void print_scan(std::ostream& out, const ScanResult& r) {
  for (const auto& cell : r.exceptions) emit(out, {"exception", "m", std::to_string(cell.m), "d", to_string(cell.d)});
}

int finish_scan(std::ostream& out, const ScanResult& r, const std::vector<ExceptionCell>& expected) {
  print_scan(out, r);
  const bool match = r.exceptions == expected;
  emit(out, {"exceptions", std::to_string(r.exceptions.size()), "expected", std::to_string(expected.size()),
             match ? "MATCH" : "MISMATCH"});
  return match ? exit_ok : exit_mismatch;
}

void print_conic(std::ostream& out, const ConicFiber& conic, const std::optional<std::array<Rational, 3>>& image) {
  emit_row(out, "conic", conic.coefficients);
  if (image) emit(out, {"residual", to_string(conic.evaluate((*image)[0], (*image)[1], (*image)[2]))});
}

template <CoefficientField F>
void print_clifford(std::ostream& out, const QuadraticFormB<F>& q) {
  const auto cl = build_clifford(q);
  emit(out, {"variables", std::to_string(q.variables())});
  emit(out, {"dimension", std::to_string(cl.algebra.dim)});
  emit(out, {"smooth", yes_no(is_smooth_quadric(q))});
  emit(out, {"even_rank", std::to_string(cl.even.dim)});
  emit(out, {"azumaya", yes_no(is_azumaya_over_field(cl.even))});
}

Matrix<Rational> square_matrix(const std::vector<Rational>& entries) {
  std::size_t n = 0;
  while (n * n < entries.size()) ++n;
  if (n * n != entries.size()) throw InputError("--b needs a square number of entries");
  Matrix<Rational> m(n, n, Rational(0));
  for (std::size_t i = 0; i < entries.size(); ++i) m(i / n, i % n) = entries[i];
  return m;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of quiver moduli spaces", args.empty() ? "quivermod" : args.front()};
  app.require_subcommand(1);
  Inputs in;
  Action action;

  auto add_quiver = [&](CLI::App* sub) {
    sub->add_option("--quiver", in.quiver, "quiver file, loop:m or kronecker:m")->required();
  };
  auto add_theta = [&](CLI::App* sub) { sub->add_option("--theta", in.theta, "stability weights")->required(); };
  auto add_d = [&](CLI::App* sub) { sub->add_option("--d", in.d, "dimension vector")->required(); };

  auto* euler = app.add_subcommand("euler", "Euler form <d, e>");
  add_quiver(euler);
  add_d(euler);
  euler->add_option("--e", in.e, "second dimension vector")->required();
  euler->callback([&] {
    action = [&](std::ostream& o) {
      const auto q = load_quiver(in.quiver);
      o << to_string(euler_form(q, parse_dimension_vector(in.d), parse_dimension_vector(in.e))) << '\n';
      return exit_ok;
    };
  });

  auto* slope_cmd = app.add_subcommand("slope", "slope theta(d) / dim d");
  add_theta(slope_cmd);
  add_d(slope_cmd);
  slope_cmd->callback([&] {
    action = [&](std::ostream& o) {
      o << to_string(slope(parse_stability(in.theta), parse_dimension_vector(in.d))) << '\n';
      return exit_ok;
    };
  });

  auto* gcd_cmd = app.add_subcommand("gcd", "gcd of the entries of d");
  add_d(gcd_cmd);
  gcd_cmd->callback([&] {
    action = [&](std::ostream& o) {
      o << to_string(gcd_of(parse_dimension_vector(in.d))) << '\n';
      return exit_ok;
    };
  });

  auto* weights = app.add_subcommand("weights", "integers a with sum a_i d_i = gcd(d)");
  add_d(weights);
  weights->callback([&] {
    action = [&](std::ostream& o) {
      const auto w = linearization_weights(parse_dimension_vector(in.d));
      for (std::size_t i = 0; i < w.size(); ++i) o << (i ? "\t" : "") << to_string(w[i]);
      o << '\n';
      return exit_ok;
    };
  });

  auto* dim = app.add_subcommand("dim", "moduli dimension 1 - <d, d>");
  add_quiver(dim);
  add_d(dim);
  dim->add_option("--n", in.n, "framing vector; also print the projective bundle's relative dimension");
  dim->callback([&] {
    action = [&](std::ostream& o) {
      const auto q = load_quiver(in.quiver);
      const auto d = parse_dimension_vector(in.d);
      emit(o, {"dimension", to_string(moduli_dimension(q, d))});
      if (!in.n.empty())
        emit(o, {"relative_dimension", to_string(framed_bundle_relative_dimension(d, parse_dimension_vector(in.n)))});
      return exit_ok;
    };
  });

  auto* ample = app.add_subcommand("amply-stable", "check <e, f> <= -2 on destabilizing splits");
  add_quiver(ample);
  add_theta(ample);
  add_d(ample);
  ample->callback([&] {
    action = [&](std::ostream& o) {
      const auto r = check_ample_stability_criterion(load_quiver(in.quiver), parse_stability(in.theta),
                                                     parse_dimension_vector(in.d));
      emit(o, {"verdict", r.pass ? "pass" : "fail"});
      emit(o, {"qualifying", std::to_string(r.qualifying)});
      emit(o, {"max_pairing", r.max_pairing ? to_string(*r.max_pairing) : "none"});
      if (r.witness)
        emit(o, {"witness", to_string(r.witness->e), to_string(r.witness->f), to_string(*r.witness_pairing)});
      return exit_ok;
    };
  });

  auto* hn = app.add_subcommand("hn", "candidate Harder-Narasimhan types (no semistability filter)");
  add_quiver(hn);
  add_theta(hn);
  add_d(hn);
  hn->add_option("--max-parts", in.max_parts, "maximal number of parts")->required();
  hn->callback([&] {
    action = [&](std::ostream& o) {
      const auto q = load_quiver(in.quiver);
      const auto types = hn_types(q, parse_stability(in.theta), parse_dimension_vector(in.d), in.max_parts);
      for (const auto& t : types) {
        o << "type\t" << to_string(hn_codimension(q, t));
        for (const auto& part : t.parts) o << '\t' << to_string(part);
        o << '\n';
      }
      emit(o, {"types", std::to_string(types.size())});
      return exit_ok;
    };
  });

  auto* wall = app.add_subcommand("wall", "codimension of the strictly semistable locus");
  add_quiver(wall);
  add_theta(wall);
  add_d(wall);
  wall->callback([&] {
    action = [&](std::ostream& o) {
      const auto c = strictly_semistable_wall_codim(load_quiver(in.quiver), parse_stability(in.theta),
                                                    parse_dimension_vector(in.d));
      emit(o, {"codimension", c ? to_string(*c) : "none"});
      return exit_ok;
    };
  });

  auto* brauer = app.add_subcommand("brauer", "predicted Brauer group order and status");
  add_quiver(brauer);
  add_theta(brauer);
  add_d(brauer);
  brauer->callback([&] {
    action = [&](std::ostream& o) {
      const auto p = predict_brauer(load_quiver(in.quiver), parse_stability(in.theta), parse_dimension_vector(in.d));
      emit(o, {"order", to_string(p.order), "status", to_string(p.status)});
      return exit_ok;
    };
  });

  auto* fine = app.add_subcommand("fine", "existence of a universal representation");
  add_d(fine);
  fine->callback([&] {
    action = [&](std::ostream& o) {
      const auto v = fine_moduli_predicate(parse_dimension_vector(in.d));
      emit(o, {"fine", yes_no(v.fine)});
      emit(o, {"note", v.note});
      return exit_ok;
    };
  });

  auto add_scan = [&](CLI::App* sub) {
    sub->add_option("--m-max", in.m_max, "largest arrow count")->required();
    sub->add_option("--d-max", in.d_max, "largest dimension entry")->required();
    sub->add_option("--threads", in.threads, "worker count (default: QUIVERMOD_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--serial", in.serial, "use the serial reference kernel");
  };
  auto* vloop = app.add_subcommand("verify-loop", "scan loop quivers m in [2, M], d in [2, D]");
  add_scan(vloop);
  vloop->callback([&] {
    action = [&](std::ostream& o) {
      const IntRange m{2, in.m_max}, d{2, in.d_max};
      const auto r = loop_criterion_exceptions(m, d, in.serial ? Execution::serial : Execution::parallel, in.threads);
      return finish_scan(o, r, expected_loop_exceptions(m, d));
    };
  });
  auto* vkron = app.add_subcommand("verify-kronecker", "scan Kronecker quivers m in [3, M], d in [1, D]^2");
  add_scan(vkron);
  vkron->callback([&] {
    action = [&](std::ostream& o) {
      const IntRange m{3, in.m_max}, box{1, in.d_max};
      const auto r =
          kronecker_criterion_exceptions(m, box, in.serial ? Execution::serial : Execution::parallel, in.threads);
      return finish_scan(o, r, expected_kronecker_exceptions(m, box));
    };
  });

  auto add_matrix = [&](CLI::App* sub, const std::string& name, std::string& target) {
    sub->add_option("--" + name, target, "2x2 matrix a11,a12,a21,a22")->required();
  };
  auto* l2 = app.add_subcommand("l2", "invariants and conic of a pair of 2x2 matrices");
  add_matrix(l2, "A", in.a);
  add_matrix(l2, "B", in.b);
  l2->add_option("--v", in.v, "vector v1,v2 for the semiinvariants");
  l2->callback([&] {
    action = [&](std::ostream& o) {
      const auto a = parse_mat2(in.a), b = parse_mat2(in.b);
      const auto p = l2_invariants(a, b);
      emit_row(o, "invariants", std::array<Rational, 5>{p.a, p.b, p.c, p.d, p.e});
      emit(o, {"h", to_string(p.h)});
      emit(o, {"stable", yes_no(p.stable())});
      std::optional<std::array<Rational, 3>> image;
      if (!in.v.empty()) {
        image = l2_semiinvariants(a, b, parse_vec2(in.v));
        emit_row(o, "semiinvariants", *image);
      }
      print_conic(o, l2_conic(p), image);
      return exit_ok;
    };
  });

  auto* k3 = app.add_subcommand("k3", "invariants and conic of a triple of 2x2 matrices");
  add_matrix(k3, "A", in.a);
  add_matrix(k3, "B", in.b);
  add_matrix(k3, "C", in.c);
  k3->add_option("--v", in.v, "vector v1,v2 for the semiinvariants");
  k3->callback([&] {
    action = [&](std::ostream& o) {
      const auto a = parse_mat2(in.a), b = parse_mat2(in.b), c = parse_mat2(in.c);
      const auto p = k3_invariants(a, b, c);
      emit_row(o, "invariants", p.coords);
      emit(o, {"h", to_string(p.h)});
      emit(o, {"stable", yes_no(p.stable())});
      std::optional<std::array<Rational, 3>> image;
      if (!in.v.empty()) {
        image = k3_semiinvariants(a, b, c, parse_vec2(in.v));
        emit_row(o, "semiinvariants", *image);
      }
      if (!p.degenerate()) print_conic(o, k3_conic(p), image);
      return exit_ok;
    };
  });

  auto* clifford = app.add_subcommand("clifford", "Clifford algebra of a quadratic form given by its b-matrix");
  clifford->add_option("--b", in.bmatrix, "row-major symmetric b-matrix of rationals")->required();
  clifford->add_option("--char", in.characteristic, "work modulo this prime instead of over Q");
  clifford->callback([&] {
    action = [&](std::ostream& o) {
      const auto b = square_matrix(parse_rational_list(in.bmatrix));
      if (in.characteristic == 0) {
        const QuadraticFormB<RationalField> q(RationalField{}, b);
        print_clifford(o, q);
        if (q.variables() == 3 && is_smooth_quadric(q)) {
          const auto h = quaternion_from_ternary(q);
          emit(o, {"quaternion", to_string(h.u), to_string(h.v)});
        }
      } else {
        const PrimeField f(in.characteristic);
        Matrix<std::uint64_t> bp(b.rows(), b.cols(), 0);
        for (std::size_t i = 0; i < b.rows(); ++i)
          for (std::size_t j = 0; j < b.cols(); ++j) bp(i, j) = f.from_rational(b(i, j));
        print_clifford(o, QuadraticFormB<PrimeField>(f, std::move(bp)));
      }
      return exit_ok;
    };
  });

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert symbols (u, v) at all relevant places");
  hilbert->add_option("symbols", in.positional, "two nonzero rationals")->expected(2)->required();
  hilbert->callback([&] {
    action = [&](std::ostream& o) {
      const QuaternionAlgebra h(parse_rational(in.positional.at(0)), parse_rational(in.positional.at(1)));
      for (const auto& s : hilbert_symbols(h.u, h.v)) emit(o, {"symbol", s.place.to_string(), std::to_string(s.value)});
      emit(o, {"split", yes_no(quaternion_is_split(h))});
      return exit_ok;
    };
  });

  auto* conic = app.add_subcommand("conic", "rational point on c1 x^2 + c2 xy + c3 xz + c4 y^2 + c5 yz + c6 z^2");
  conic->add_option("coefficients", in.positional, "six rationals")->expected(6)->required();
  conic->callback([&] {
    action = [&](std::ostream& o) {
      std::array<Rational, 6> c;
      for (std::size_t i = 0; i < 6; ++i) c[i] = parse_rational(in.positional.at(i));
      const auto r = conic_has_rational_point(c);
      emit(o, {"has_point", yes_no(r.has_point)});
      if (r.witness) emit_row(o, "witness", *r.witness);
      emit(o, {"quaternion", to_string(r.quaternion.u), to_string(r.quaternion.v)});
      return exit_ok;
    };
  });

  auto* hilbpoly = app.add_subcommand("hilbpoly", "Hilbert polynomial of an n-dimensional quadric at t");
  hilbpoly->add_option("arguments", in.positional, "quadric dimension and argument")->expected(2)->required();
  hilbpoly->callback([&] {
    action = [&](std::ostream& o) {
      const Integer n = parse_integer(in.positional.at(0));
      if (n < 0 || !n.fits_ulong_p()) throw InputError("n must be a nonnegative machine integer");
      o << to_string(hilbert_polynomial_quadric(n.get_ui(), parse_integer(in.positional.at(1)))) << '\n';
      return exit_ok;
    };
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("quivermod");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }
  std::ostringstream buffer;
  try {
    const int code = action(buffer);
    out << buffer.str();
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace quivermod::cli
