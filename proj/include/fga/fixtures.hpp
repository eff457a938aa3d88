#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fga/expr.hpp"
#include "fga/frames.hpp"
#include "fga/metric.hpp"

namespace fga {

/// Plain-text expression tables: each data line is `row col expression`,
/// where row is an integer, col is an integer or a coordinate letter, and
/// the expression (rest of line) is parsed with the declared symbol set.
/// Lines starting with '#' are comments; omitted entries are zero.
struct FixtureEntry {
  int row = 0;
  std::string col;
  std::string expr;
};

inline std::vector<FixtureEntry> load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FieldError("cannot open fixture file: " + path);
  std::vector<FixtureEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    FixtureEntry e;
    if (!(ls >> e.row >> e.col)) continue;
    std::getline(ls, e.expr);
    if (e.expr.find_first_not_of(" \t") == std::string::npos)
      throw FieldError("fixture entry without expression in " + path);
    out.push_back(e);
  }
  return out;
}

inline std::string fixture_path(const std::string& name) {
#ifdef FGA_FIXTURE_DIR
  return std::string(FGA_FIXTURE_DIR) + "/" + name;
#else
  return "fixtures/" + name;
#endif
}

inline int coord7_index(const std::string& tok) {
  static const std::map<std::string, int> m = {{"x", 0}, {"y", 1}, {"p", 2},
                                               {"q", 3}, {"z", 4}, {"t", 5},
                                               {"u", 6}};
  auto it = m.find(tok);
  if (it == m.end()) throw FieldError("bad coordinate token in fixture: " + tok);
  return it->second;
}

/// Environment binding the fixture symbol set to jets.  Coordinates x..u are
/// bound positionally; named symbols are bound through the parser's
/// parameter mechanism.
template <class T>
struct FixtureEnv {
  std::vector<std::string> names;
  std::vector<Jet<T>> values;
  std::vector<Jet<T>> coords;

  void bind(const std::string& name, const Jet<T>& v) {
    names.push_back(name);
    values.push_back(v);
  }
  Jet<T> eval(const std::string& text) const {
    Expr e = parse_expr(text, names);
    return eval_jet_env<T>(e, coords, values);
  }
};

/// 7x7 matrix of scalars (e.g. the printed frame metric).
template <class T>
JetMatrix<T> load_scalar_matrix(const std::string& name, const FixtureEnv<T>& env,
                                int dim = 7) {
  int nv = env.coords.at(0).nvars(), order = env.coords.at(0).order();
  JetMatrix<T> m(dim, std::vector<Jet<T>>(dim, Jet<T>(nv, order)));
  for (const auto& e : load_fixture(fixture_path(name)))
    m.at(e.row).at(std::stoi(e.col)) = env.eval(e.expr);
  return m;
}

/// Coframe rows theta[a][i] over the 7 coordinates.
template <class T>
JetMatrix<T> load_coframe(const std::string& name, const FixtureEnv<T>& env,
                          int dim = 7) {
  int nv = env.coords.at(0).nvars(), order = env.coords.at(0).order();
  JetMatrix<T> th(dim, std::vector<Jet<T>>(dim, Jet<T>(nv, order)));
  for (const auto& e : load_fixture(fixture_path(name)))
    th.at(e.row).at(coord7_index(e.col)) = env.eval(e.expr);
  return th;
}

/// Connection-matrix fixture: entries are one-forms, linear in the frame
/// symbols th0..th6.  Each frame coefficient is extracted by a one-hot
/// binding of the th symbols.
template <class T>
ConnectionMatrix<T> load_connection(const std::string& name, FixtureEnv<T> env,
                                    int dim = 7) {
  int nv = env.coords.at(0).nvars(), order = env.coords.at(0).order();
  Jet<T> zero(nv, order);
  std::size_t th0 = env.names.size();
  for (int a = 0; a < dim; ++a) env.bind("th" + std::to_string(a), zero);
  ConnectionMatrix<T> w(dim, std::vector<FrameForm1<T>>(
                                 dim, FrameForm1<T>(dim, zero)));
  auto entries = load_fixture(fixture_path(name));
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b)
      env.values[th0 + b] = (a == b) ? Jet<T>::constant(nv, order, T(1)) : zero;
    for (const auto& e : entries)
      w.at(e.row).at(std::stoi(e.col))[a] = env.eval(e.expr);
  }
  return w;
}

/// Vector-of-two-forms fixture (e.g. a torsion display): entries are linear
/// in the symbols wAB = theta^A wedge theta^B, A < B.
template <class T>
std::vector<FrameForm2<T>> load_two_form_vector(const std::string& name,
                                                FixtureEnv<T> env, int dim = 7) {
  int nv = env.coords.at(0).nvars(), order = env.coords.at(0).order();
  Jet<T> zero(nv, order);
  std::size_t w0 = env.names.size();
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) {
      env.bind("w" + std::to_string(a) + std::to_string(b), zero);
      slots.emplace_back(a, b);
    }
  std::vector<FrameForm2<T>> out(
      dim, FrameForm2<T>(dim, std::vector<Jet<T>>(dim, zero)));
  auto entries = load_fixture(fixture_path(name));
  for (std::size_t s = 0; s < slots.size(); ++s) {
    for (std::size_t k = 0; k < slots.size(); ++k)
      env.values[w0 + k] = (k == s) ? Jet<T>::constant(nv, order, T(1)) : zero;
    auto [a, b] = slots[s];
    for (const auto& e : entries) {
      Jet<T> v = env.eval(e.expr);
      out.at(e.row)[a][b] += v;
      out.at(e.row)[b][a] -= v;
    }
  }
  return out;
}

}  // namespace fga
