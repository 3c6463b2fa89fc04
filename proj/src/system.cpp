#include "shilov/system.hpp"

#include <charconv>
#include <sstream>

namespace shilov {

int FactorSpec::dim() const {
  return kind == Kind::CartanI ? p * q : p * (p - 1) / 2;
}

TripleSystem TripleSystem::cartan_I(int p, int q) {
  if (q < 1 || p < q)
    throw DimensionError("CartanI requires p >= q >= 1, got p=" +
                         std::to_string(p) + " q=" + std::to_string(q));
  TripleSystem s;
  s.factors_.push_back({FactorSpec::Kind::CartanI, p, q});
  return s;
}

TripleSystem TripleSystem::cartan_II(int p) {
  if (p < 5 || p % 2 == 0)
    throw DimensionError("CartanII requires an odd p >= 5, got p=" +
                         std::to_string(p));
  TripleSystem s;
  s.factors_.push_back({FactorSpec::Kind::CartanII, p, (p - 1) / 2});
  return s;
}

TripleSystem TripleSystem::product(const std::vector<TripleSystem>& factors) {
  if (factors.empty()) throw DimensionError("product needs at least 1 factor");
  TripleSystem s;
  for (const auto& f : factors)
    s.factors_.insert(s.factors_.end(), f.factors_.begin(), f.factors_.end());
  return s;
}

namespace {

int parse_int(std::string_view text, std::string_view spec) {
  int value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw InputError("bad integer '" + std::string(text) + "' in system spec '" +
                     std::string(spec) + "'");
  return value;
}

TripleSystem parse_simple(std::string_view tok, std::string_view spec) {
  if (tok.rfind("II:", 0) == 0)
    return TripleSystem::cartan_II(parse_int(tok.substr(3), spec));
  if (tok.rfind("I:", 0) == 0) {
    const auto body = tok.substr(2);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos)
      throw InputError("expected 'I:<p>,<q>' in '" + std::string(spec) + "'");
    return TripleSystem::cartan_I(parse_int(body.substr(0, comma), spec),
                                  parse_int(body.substr(comma + 1), spec));
  }
  throw InputError("unknown factor '" + std::string(tok) + "' in system spec '" +
                   std::string(spec) + "' (expected I:<p>,<q> or II:<p>)");
}

}  // namespace

TripleSystem TripleSystem::parse(std::string_view spec) {
  std::vector<TripleSystem> parts;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto end = spec.find('x', start);
    if (end == std::string_view::npos) end = spec.size();
    parts.push_back(parse_simple(spec.substr(start, end - start), spec));
    start = end + 1;
    if (end == spec.size()) break;
  }
  return product(parts);
}

std::string TripleSystem::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < num_factors(); ++i) {
    if (i) out << 'x';
    const auto& f = factors_[i];
    if (f.kind == FactorSpec::Kind::CartanI)
      out << "I:" << f.p << ',' << f.q;
    else
      out << "II:" << f.p;
  }
  return out.str();
}

int TripleSystem::rank() const {
  int r = 0;
  for (const auto& f : factors_) r += f.rank();
  return r;
}

int TripleSystem::dim() const {
  int d = 0;
  for (const auto& f : factors_) d += f.dim();
  return d;
}

int TripleSystem::factor_offset(int i) const {
  int off = 0;
  for (int j = 0; j < i; ++j) off += factors_.at(j).dim();
  return off;
}

Element::Element(TripleSystem sys, std::vector<CMat> blocks)
    : sys_(std::move(sys)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != sys_.num_factors())
    throw DimensionError("element has " + std::to_string(blocks_.size()) +
                         " blocks for a system with " +
                         std::to_string(sys_.num_factors()) + " factors");
  for (int i = 0; i < sys_.num_factors(); ++i) {
    const auto& f = sys_.factor(i);
    CMat& b = blocks_[i];
    if (b.rows() != f.rows() || b.cols() != f.cols())
      throw DimensionError("factor " + std::to_string(i) + " expects " +
                           std::to_string(f.rows()) + "x" +
                           std::to_string(f.cols()) + ", got " +
                           std::to_string(b.rows()) + "x" +
                           std::to_string(b.cols()));
    if (f.kind == FactorSpec::Kind::CartanII) {
      const CMat sym = 0.5 * (b + b.transpose());
      if (sym.norm() > kRepairTol * rel_scale(b.norm()))
        throw DimensionError("CartanII data is not antisymmetric (residual " +
                             std::to_string(sym.norm()) + ")");
      b -= sym;
    }
  }
}

Element Element::zero(const TripleSystem& sys) {
  std::vector<CMat> blocks;
  for (const auto& f : sys.factors())
    blocks.push_back(CMat::Zero(f.rows(), f.cols()));
  return Element(sys, std::move(blocks));
}

Element Element::operator+(const Element& rhs) const {
  require_same_system(*this, rhs);
  Element out = *this;
  for (int i = 0; i < num_blocks(); ++i) out.blocks_[i] += rhs.blocks_[i];
  return out;
}

Element Element::operator-(const Element& rhs) const {
  require_same_system(*this, rhs);
  Element out = *this;
  for (int i = 0; i < num_blocks(); ++i) out.blocks_[i] -= rhs.blocks_[i];
  return out;
}

Element Element::operator-() const { return *this * cxd(-1.0, 0.0); }

Element Element::operator*(cxd scalar) const {
  Element out = *this;
  for (auto& b : out.blocks_) b *= scalar;
  return out;
}

cxd Element::inner(const Element& rhs) const {
  require_same_system(*this, rhs);
  cxd acc = 0;
  for (int i = 0; i < num_blocks(); ++i)
    acc += (blocks_[i].adjoint() * rhs.blocks_[i]).trace();
  return acc;
}

double Element::norm() const {
  double acc = 0;
  for (const auto& b : blocks_) acc += b.squaredNorm();
  return std::sqrt(acc);
}

bool Element::is_zero(double tol) const { return norm() <= tol; }

CVec Element::coordinates() const {
  CVec c(sys_.dim());
  int pos = 0;
  for (int i = 0; i < num_blocks(); ++i) {
    const auto& f = sys_.factor(i);
    const CMat& b = blocks_[i];
    if (f.kind == FactorSpec::Kind::CartanI) {
      for (int col = 0; col < b.cols(); ++col)
        for (int row = 0; row < b.rows(); ++row) c(pos++) = b(row, col);
    } else {
      const double s = std::sqrt(2.0);
      for (int col = 0; col < f.p; ++col)
        for (int row = col + 1; row < f.p; ++row) c(pos++) = s * b(row, col);
    }
  }
  return c;
}

Element Element::from_coordinates(const TripleSystem& sys, const CVec& c) {
  if (c.size() != sys.dim())
    throw DimensionError("coordinate vector has size " + std::to_string(c.size()) +
                         ", system dimension is " + std::to_string(sys.dim()));
  std::vector<CMat> blocks;
  int pos = 0;
  for (const auto& f : sys.factors()) {
    CMat b = CMat::Zero(f.rows(), f.cols());
    if (f.kind == FactorSpec::Kind::CartanI) {
      for (int col = 0; col < b.cols(); ++col)
        for (int row = 0; row < b.rows(); ++row) b(row, col) = c(pos++);
    } else {
      const double s = 1.0 / std::sqrt(2.0);
      for (int col = 0; col < f.p; ++col)
        for (int row = col + 1; row < f.p; ++row) {
          const cxd v = s * c(pos++);
          b(row, col) = v;
          b(col, row) = -v;
        }
    }
    blocks.push_back(std::move(b));
  }
  return Element(sys, std::move(blocks));
}

Element Element::basis_element(const TripleSystem& sys, int k) {
  CVec c = CVec::Zero(sys.dim());
  c(k) = 1.0;
  return from_coordinates(sys, c);
}

void require_same_system(const Element& a, const Element& b) {
  if (!(a.system() == b.system()))
    throw DimensionError("elements belong to different systems (" +
                         a.system().to_string() + " vs " +
                         b.system().to_string() + ")");
}

TripleSystem factor_system(const TripleSystem& sys, int index) {
  if (index < 0 || index >= sys.num_factors())
    throw DimensionError("factor index " + std::to_string(index) +
                         " out of range");
  TripleSystem sub;
  const auto& f = sys.factor(index);
  return f.kind == FactorSpec::Kind::CartanI ? TripleSystem::cartan_I(f.p, f.q)
                                             : TripleSystem::cartan_II(f.p);
}

Element embed_factor(const TripleSystem& sys, int index, const Element& x) {
  if (index < 0 || index >= sys.num_factors())
    throw DimensionError("factor index " + std::to_string(index) +
                         " out of range");
  if (!(x.system() == factor_system(sys, index)))
    throw DimensionError("embedded element does not match factor " +
                         std::to_string(index));
  Element out = Element::zero(sys);
  std::vector<CMat> blocks;
  for (int i = 0; i < sys.num_factors(); ++i)
    blocks.push_back(i == index ? x.block(0) : out.block(i));
  return Element(sys, std::move(blocks));
}

Element project_factor(const Element& z, int index) {
  const auto sub = factor_system(z.system(), index);
  return Element(sub, {z.block(index)});
}

Element apply_operator(const CMat& op, const Element& x) {
  const CVec c = x.coordinates();
  if (op.rows() != c.size() || op.cols() != c.size())
    throw DimensionError("operator size does not match system dimension");
  return Element::from_coordinates(x.system(), op * c);
}

}  // namespace shilov
