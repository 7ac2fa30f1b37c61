#include "confcoh/graded_ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace confcoh {

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

Monomial Monomial::times(const Monomial& other) const {
  if (exponents_.size() != other.exponents_.size())
    throw std::invalid_argument("Monomial::times: generator count mismatch");
  std::vector<int> out(exponents_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = exponents_[i] + other.exponents_[i];
  return Monomial(std::move(out));
}

RingElement::RingElement(std::shared_ptr<const Presentation> pres, int degree, TermMap terms)
    : pres_(std::move(pres)), degree_(degree), terms_(std::move(terms)) {
  normalize();
}

void RingElement::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (pres_ && pres_->mode() == CoefficientMode::mod2) {
      Int r = it->second % 2;
      it->second = (r < 0) ? r + 2 : r;
    }
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

namespace {

void check_same_presentation(const RingElement& a, const RingElement& b) {
  if (a.presentation() != b.presentation())
    throw std::invalid_argument("ring elements belong to different presentations");
}

}  // namespace

RingElement& RingElement::operator+=(const RingElement& other) {
  check_same_presentation(*this, other);
  if (terms_.empty() && !other.terms_.empty()) degree_ = other.degree_;
  if (!terms_.empty() && !other.terms_.empty() && degree_ != other.degree_)
    throw std::invalid_argument("ring element sum: degree mismatch");
  for (const auto& [mon, coeff] : other.terms_) terms_[mon] += coeff;
  normalize();
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  check_same_presentation(*this, other);
  if (terms_.empty() && !other.terms_.empty()) degree_ = other.degree_;
  if (!terms_.empty() && !other.terms_.empty() && degree_ != other.degree_)
    throw std::invalid_argument("ring element difference: degree mismatch");
  for (const auto& [mon, coeff] : other.terms_) terms_[mon] -= coeff;
  normalize();
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  check_same_presentation(a, b);
  TermMap out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out[ma.times(mb)] += ca * cb;
  return RingElement(a.pres_, a.degree_ + b.degree_, std::move(out));
}

RingElement operator*(const Int& c, const RingElement& e) {
  TermMap out;
  for (const auto& [mon, coeff] : e.terms_) out[mon] = c * coeff;
  return RingElement(e.pres_, e.degree_, std::move(out));
}

RingElement RingElement::pow(int k) const {
  if (k < 0) throw std::invalid_argument("RingElement::pow: negative exponent");
  RingElement out = pres_->one();
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  const auto& gens = pres_->generators();
  std::ostringstream os;
  bool first = true;
  for (const auto& [mon, coeff] : terms_) {
    Int c = coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    std::string mon_str;
    for (std::size_t i = 0; i < mon.size(); ++i) {
      if (mon.exponent(i) == 0) continue;
      if (!mon_str.empty()) mon_str += "*";
      mon_str += gens[i].name;
      if (mon.exponent(i) > 1) mon_str += "^" + std::to_string(mon.exponent(i));
    }
    if (mon_str.empty())
      os << c.str();
    else if (c == 1)
      os << mon_str;
    else
      os << c.str() << "*" << mon_str;
  }
  return os.str();
}

std::shared_ptr<const Presentation> Presentation::create(
    std::string id, CoefficientMode mode, std::vector<GeneratorSpec> generators,
    std::vector<RawPolynomial> relations, int default_degree_bound,
    std::vector<RawPolynomial> sq1_on_generators) {
  auto p = std::shared_ptr<Presentation>(new Presentation());
  p->id_ = std::move(id);
  p->mode_ = mode;
  p->generators_ = std::move(generators);
  p->default_degree_bound_ = default_degree_bound;

  std::set<std::string> names;
  for (const auto& g : p->generators_) {
    if (g.degree <= 0) throw std::invalid_argument("generator degree must be positive");
    if (!names.insert(g.name).second)
      throw std::invalid_argument("duplicate generator name: " + g.name);
  }

  auto term_degree = [&](const std::vector<int>& exps) {
    if (exps.size() != p->generators_.size())
      throw std::invalid_argument("term exponent count does not match generators");
    int d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0) throw std::invalid_argument("negative exponent in term");
      d += exps[i] * p->generators_[i].degree;
    }
    return d;
  };

  auto build_poly = [&](const RawPolynomial& raw, const char* what) {
    TermMap terms;
    int degree = -1;
    for (const auto& t : raw) {
      int d = term_degree(t.exponents);
      if (degree < 0)
        degree = d;
      else if (d != degree)
        throw std::invalid_argument(std::string(what) + " is not homogeneous");
      terms[Monomial(t.exponents)] += t.coeff;
    }
    // normalize in place, matching RingElement::normalize
    for (auto it = terms.begin(); it != terms.end();) {
      if (mode == CoefficientMode::mod2) {
        Int r = it->second % 2;
        it->second = (r < 0) ? r + 2 : r;
      }
      if (it->second == 0)
        it = terms.erase(it);
      else
        ++it;
    }
    return std::pair<int, TermMap>(degree, std::move(terms));
  };

  for (const auto& raw : relations) {
    auto [degree, terms] = build_poly(raw, "relation");
    if (terms.empty()) continue;  // the zero relation imposes nothing
    if (degree < 1) throw std::invalid_argument("relation degree must be >= 1");
    p->relations_.emplace_back(degree, std::move(terms));
  }

  if (!sq1_on_generators.empty()) {
    if (mode != CoefficientMode::mod2)
      throw std::invalid_argument("Sq^1 values require a mod-2 presentation");
    if (sq1_on_generators.size() != p->generators_.size())
      throw std::invalid_argument("Sq^1 values must cover every generator");
    for (std::size_t i = 0; i < sq1_on_generators.size(); ++i) {
      auto [degree, terms] = build_poly(sq1_on_generators[i], "Sq^1 value");
      int expected = p->generators_[i].degree + 1;
      if (!terms.empty() && degree != expected)
        throw std::invalid_argument("Sq^1 value has wrong degree for " + p->generators_[i].name);
      p->sq1_.emplace_back(expected, std::move(terms));
    }
  }
  return p;
}

std::size_t Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  throw std::invalid_argument("unknown generator: " + std::string(name));
}

RingElement Presentation::relation(std::size_t i) const {
  return RingElement(shared_from_this(), relations_[i].first, relations_[i].second);
}

RingElement Presentation::sq1_of_generator(std::size_t i) const {
  if (!has_sq1()) throw std::logic_error("presentation declares no Sq^1 action");
  return RingElement(shared_from_this(), sq1_[i].first, sq1_[i].second);
}

int Presentation::monomial_degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < generators_.size(); ++i) d += m.exponent(i) * generators_[i].degree;
  return d;
}

std::vector<Monomial> Presentation::monomials_of_degree(int degree) const {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<int> exps(generators_.size(), 0);
  // descending leading exponents produce the basis order directly
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == generators_.size()) {
      if (remaining == 0) out.emplace_back(exps);
      return;
    }
    const int g = generators_[i].degree;
    for (int e = remaining / g; e >= 0; --e) {
      exps[i] = e;
      self(self, i + 1, remaining - e * g);
    }
    exps[i] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

RingElement Presentation::zero(int degree) const {
  return RingElement(shared_from_this(), degree, TermMap{});
}

RingElement Presentation::one() const {
  TermMap terms;
  terms[Monomial(std::vector<int>(generators_.size(), 0))] = 1;
  return RingElement(shared_from_this(), 0, std::move(terms));
}

RingElement Presentation::generator(std::string_view name) const {
  std::size_t idx = generator_index(name);
  std::vector<int> exps(generators_.size(), 0);
  exps[idx] = 1;
  return element(Int(1), std::move(exps));
}

RingElement Presentation::element(Int coeff, std::vector<int> exponents) const {
  Monomial mon(std::move(exponents));
  if (mon.size() != generators_.size())
    throw std::invalid_argument("element: exponent count does not match generators");
  int degree = monomial_degree(mon);
  TermMap terms;
  terms[std::move(mon)] = std::move(coeff);
  return RingElement(shared_from_this(), degree, std::move(terms));
}

std::shared_ptr<const GradedPiece> Presentation::piece(int degree) const {
  if (degree < 0) throw std::invalid_argument("piece: degree must be >= 0");
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = piece_cache_.find(degree);
    if (it != piece_cache_.end()) return it->second;
  }
  auto built = build_piece(degree);  // outside the lock: distinct degrees in parallel
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto [it, inserted] = piece_cache_.emplace(degree, std::move(built));
  return it->second;
}

std::shared_ptr<const GradedPiece> Presentation::build_piece(int degree) const {
  auto piece = std::make_shared<GradedPiece>();
  piece->degree = degree;
  piece->mode = mode_;
  piece->basis = monomials_of_degree(degree);
  for (std::size_t i = 0; i < piece->basis.size(); ++i)
    piece->basis_index.emplace(piece->basis[i], i);

  const std::size_t n = piece->basis.size();

  // relation span in this degree: every (monomial) x (relation) product
  struct Row {
    std::vector<std::pair<std::size_t, Int>> entries;
  };
  std::vector<Row> rows;
  for (const auto& [rel_degree, rel_terms] : relations_) {
    if (rel_degree > degree) continue;
    for (const Monomial& mu : monomials_of_degree(degree - rel_degree)) {
      Row row;
      for (const auto& [mon, coeff] : rel_terms)
        row.entries.emplace_back(piece->basis_index.at(mu.times(mon)), coeff);
      rows.push_back(std::move(row));
    }
  }

  if (mode_ == CoefficientMode::integer) {
    IntMatrix rel(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [idx, coeff] : rows[r].entries) rel(r, idx) += coeff;
    piece->structure = quotient_structure(rel, n);
  } else {
    F2Matrix rel(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [idx, coeff] : rows[r].entries)
        if (coeff % 2 != 0) rel.set(r, idx, !rel.get(r, idx));
    piece->row_reduction = f2_row_reduce(rel);
    piece->f2_dimension = n - piece->row_reduction.rank;
  }
  return piece;
}

bool NormalForm::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Int& c) { return c == 0; });
}

NormalForm reduce(const RingElement& e) {
  const auto& pres = e.presentation();
  if (!pres) throw std::invalid_argument("reduce: element has no presentation");
  auto piece = pres->piece(e.degree());
  NormalForm nf;
  nf.piece = piece;
  if (piece->mode == CoefficientMode::integer) {
    std::vector<Int> vec(piece->basis.size(), Int(0));
    for (const auto& [mon, coeff] : e.terms()) vec[piece->basis_index.at(mon)] = coeff;
    nf.coords = piece->structure.project(vec);
  } else {
    F2Vector vec(piece->basis.size());
    for (const auto& [mon, coeff] : e.terms())
      if (coeff % 2 != 0) vec.set(piece->basis_index.at(mon), true);
    F2Vector rem = f2_reduce_vector(piece->row_reduction, std::move(vec));
    nf.coords.resize(piece->basis.size());
    for (std::size_t i = 0; i < piece->basis.size(); ++i) nf.coords[i] = rem.get(i) ? 1 : 0;
  }
  return nf;
}

bool is_zero(const RingElement& e) {
  if (e.is_structurally_zero()) return true;
  return reduce(e).is_zero();
}

RingElement canonical_representative(const RingElement& e) {
  NormalForm nf = reduce(e);
  const GradedPiece& piece = *nf.piece;
  TermMap terms;
  if (piece.mode == CoefficientMode::integer) {
    std::vector<Int> ambient = piece.structure.lift(nf.coords);
    for (std::size_t i = 0; i < piece.basis.size(); ++i)
      if (ambient[i] != 0) terms[piece.basis[i]] = ambient[i];
  } else {
    for (std::size_t i = 0; i < piece.basis.size(); ++i)
      if (nf.coords[i] != 0) terms[piece.basis[i]] = 1;
  }
  return RingElement(e.presentation(), e.degree(), std::move(terms));
}

bool equal_elements(const RingElement& a, const RingElement& b) {
  check_same_presentation(a, b);
  if (!a.is_structurally_zero() && !b.is_structurally_zero() && a.degree() != b.degree())
    throw std::invalid_argument("equal_elements: degree mismatch");
  return is_zero(a - b);
}

HeightResult height(const RingElement& x, int degree_bound) {
  const int g = x.degree();
  if (g < 1) throw std::invalid_argument("height: element must have degree >= 1");
  if (is_zero(x)) return {0, HeightStatus::exact};
  RingElement rep = canonical_representative(x);
  int k = 1;
  while ((k + 1) * g <= degree_bound) {
    RingElement next = rep * x;
    NormalForm nf = reduce(next);
    if (nf.is_zero()) return {k, HeightStatus::exact};
    rep = canonical_representative(next);
    ++k;
  }
  return {k, HeightStatus::bound_reached};
}

HeightResult height(const RingElement& x) {
  return height(x, x.presentation()->default_degree_bound());
}

}  // namespace confcoh
