#include "fmes/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace fmes {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index");
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  Poly p(nvars);
  p.add_term(e, 1);
  return p;
}

Poly Poly::linear(const std::vector<Rational>& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  Poly p(n);
  for (int i = 0; i < n; ++i) {
    Exponents e(coeffs.size(), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.add_term(e, coeffs[static_cast<std::size_t>(i)]);
  }
  return p;
}

Rational Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
  } else {
    for (auto& [e, c] : terms_) c *= s;
  }
  return *this;
}

Poly Poly::multiply(const Poly& a, const Poly& b, int max_degree) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  Poly out(a.nvars_);
  Exponents e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (max_degree >= 0 && da + total_degree(eb) > max_degree) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly Poly::pow(int n, int max_degree) const {
  if (n < 0) throw std::invalid_argument("negative power");
  Poly result = constant(nvars_, 1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1) result = multiply(result, base, max_degree);
    n >>= 1;
    if (n > 0) base = multiply(base, base, max_degree);
  }
  return result;
}

Poly Poly::derivative(int index) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    const int p = e[static_cast<std::size_t>(index)];
    if (p == 0) continue;
    Exponents f = e;
    f[static_cast<std::size_t>(index)] = p - 1;
    out.add_term(f, c * p);
  }
  return out;
}

Poly Poly::substitute(const std::vector<Poly>& images, int max_degree) const {
  if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("substitution arity");
  const int target = images.empty() ? 0 : images.front().nvars();
  Poly out(target);
  std::vector<std::map<int, Poly>> powers(images.size());
  auto power = [&](std::size_t i, int n) -> const Poly& {
    auto it = powers[i].find(n);
    if (it == powers[i].end()) it = powers[i].emplace(n, images[i].pow(n, max_degree)).first;
    return it->second;
  };
  for (const auto& [e, c] : terms_) {
    Poly term = constant(target, c);
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i)
      if (e[i] > 0) term = multiply(term, power(i, e[i]), max_degree);
    out += term;
  }
  return out;
}

std::string Poly::render(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rational mag = abs(c);
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    if (mono.empty()) {
      s += to_string(mag);
    } else if (mag == 1) {
      s += mono;
    } else {
      s += to_string(mag) + "*" + mono;
    }
  }
  return s;
}

}  // namespace fmes
