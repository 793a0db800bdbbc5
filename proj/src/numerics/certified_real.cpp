#include "cubicmahler/numerics/certified_real.hpp"

#include <stdexcept>

namespace cubicmahler::numerics {
namespace detail {

enum class Kind { Constant, Root, Add, Sub, Mul, Div, Neg, Abs, NthRoot };

struct Node {
    Kind kind = Kind::Constant;
    BigRat value;
    IntPoly poly;
    RootBracket bracket;
    unsigned degree = 0;
    std::shared_ptr<const Node> a, b;
    Interval enclosure;
    long bits = 0;
};

}  // namespace detail

namespace {

using detail::Kind;
using detail::Node;
using NodePtr = std::shared_ptr<const Node>;

constexpr long kMaxBits = 1L << 16;

long bracket_bits(const RootBracket& b)
{
    if (b.is_exact()) return kMaxBits;
    const Dyadic scale = max(Dyadic(1), max(abs(b.lo), abs(b.hi)));
    return std::max(1L, scale.msb() - (b.hi - b.lo).msb());
}

Interval nonnegative_root(const Interval& x, unsigned n)
{
    if (x.hi().sign() < 0) throw std::domain_error("CertifiedReal: root of a negative value");
    if (x.lo().sign() < 0) return nth_root(Interval(Dyadic(), x.hi(), x.precision()), n);
    return nth_root(x, n);
}

Interval combine(Kind kind, const Node& n, const Interval& x, const Interval& y)
{
    switch (kind) {
    case Kind::Add: return x + y;
    case Kind::Sub: return x - y;
    case Kind::Mul: return x * y;
    case Kind::Div: return x / y;
    case Kind::Neg: return -x;
    case Kind::Abs: return abs(x);
    case Kind::NthRoot: return nonnegative_root(x, n.degree);
    default: break;
    }
    throw std::logic_error("CertifiedReal: not an operation node");
}

// Re-evaluate the tree with leaves at `bits` and operations rounded at `bits`.
NodePtr evaluate(const NodePtr& n, long bits, bool clip = true)
{
    auto out = std::make_shared<Node>(*n);
    switch (n->kind) {
    case Kind::Constant:
        out->enclosure = Interval::from_rational(n->value, bits);
        out->bits = bits;
        break;
    case Kind::Root:
        out->bracket = refine_bracket(n->poly, n->bracket, bits);
        out->enclosure = Interval(out->bracket.lo, out->bracket.hi, out->bracket.is_exact() ? 0 : bits);
        out->bits = bracket_bits(out->bracket);
        break;
    default: {
        out->a = evaluate(n->a, bits);
        const Interval x = out->a->enclosure.with_precision(bits);
        Interval y;
        if (n->b) {
            out->b = evaluate(n->b, bits);
            y = out->b->enclosure.with_precision(bits);
        }
        out->enclosure = combine(n->kind, *n, x, y);
        out->bits = bits;
        break;
    }
    }
    if (clip && out->enclosure.overlaps(n->enclosure)) out->enclosure = intersect(out->enclosure, n->enclosure);
    return out;
}

NodePtr make_op(Kind kind, NodePtr a, NodePtr b, unsigned degree = 0)
{
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->degree = degree;
    n->a = std::move(a);
    n->b = std::move(b);
    n->bits = std::max(n->a->bits, n->b ? n->b->bits : 0L);
    const Interval x = n->a->enclosure.with_precision(std::max(n->bits, kWorkingBits));
    const Interval y = n->b ? n->b->enclosure.with_precision(std::max(n->bits, kWorkingBits)) : Interval();
    try {
        n->enclosure = combine(kind, *n, x, y);
        return n;
    } catch (const std::domain_error&) {
        // the operand enclosures are too wide (e.g. a divisor straddling zero)
    }
    for (long bits = 2 * kWorkingBits; bits <= kMaxBits; bits *= 2) {
        try {
            return evaluate(n, bits, false);
        } catch (const std::domain_error&) {
        }
    }
    throw std::domain_error("CertifiedReal: operation undefined at every precision");
}

std::optional<BigRat> exact_of(const Node& n)
{
    switch (n.kind) {
    case Kind::Constant: return n.value;
    case Kind::Root:
        if (n.bracket.is_exact()) return n.bracket.lo.to_rational();
        return std::nullopt;
    default: break;
    }
    const auto x = exact_of(*n.a);
    if (!x) return std::nullopt;
    if (n.kind == Kind::Neg) return -*x;
    if (n.kind == Kind::Abs) return abs(*x);
    if (n.kind == Kind::NthRoot) {
        if (sgn(*x) < 0) return std::nullopt;
        BigInt rn, rd;
        const bool en = mpz_root(rn.get_mpz_t(), x->get_num().get_mpz_t(), n.degree) != 0;
        const bool ed = mpz_root(rd.get_mpz_t(), x->get_den().get_mpz_t(), n.degree) != 0;
        if (!en || !ed) return std::nullopt;
        BigRat r(rn, rd);
        r.canonicalize();
        return r;
    }
    const auto y = exact_of(*n.b);
    if (!y) return std::nullopt;
    switch (n.kind) {
    case Kind::Add: return *x + *y;
    case Kind::Sub: return *x - *y;
    case Kind::Mul: return *x * *y;
    case Kind::Div:
        if (sgn(*y) == 0) return std::nullopt;
        return *x / *y;
    default: return std::nullopt;
    }
}

bool same_root(const Node& x, const Node& y)
{
    if (!(x.poly == y.poly)) return false;
    if (!x.enclosure.overlaps(y.enclosure)) return false;
    const Dyadic lo = max(x.bracket.lo, y.bracket.lo);
    const Dyadic hi = min(x.bracket.hi, y.bracket.hi);
    if (hi < lo) return false;
    const int s1 = x.poly.sign_at(lo), s2 = x.poly.sign_at(hi);
    return s1 == 0 || s2 == 0 || s1 != s2;
}

bool same_tree(const NodePtr& x, const NodePtr& y)
{
    if (x == y) return true;
    if (!x || !y || x->kind != y->kind) return false;
    switch (x->kind) {
    case Kind::Constant: return x->value == y->value;
    case Kind::Root: return same_root(*x, *y);
    default: break;
    }
    if (x->degree != y->degree) return false;
    return same_tree(x->a, y->a) && same_tree(x->b, y->b);
}

NodePtr constant(const BigRat& q)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::Constant;
    n->value = q;
    n->enclosure = Interval::from_rational(q, kWorkingBits);
    n->bits = kWorkingBits;
    return n;
}

}  // namespace

CertifiedReal::CertifiedReal() : node_(constant(BigRat(0))) {}
CertifiedReal::CertifiedReal(long v) : node_(constant(BigRat(v))) {}
CertifiedReal::CertifiedReal(const BigInt& v) : node_(constant(BigRat(v))) {}
CertifiedReal::CertifiedReal(const BigRat& v) : node_(constant(v)) {}

CertifiedReal CertifiedReal::root_of(const IntPoly& p, const RootBracket& b)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::Root;
    n->poly = p;
    n->bracket = b;
    n->enclosure = Interval(b.lo, b.hi, b.is_exact() ? 0 : Interval::kDefaultPrecision);
    n->bits = bracket_bits(b);
    return CertifiedReal(std::move(n));
}

const Interval& CertifiedReal::enclosure() const { return node_->enclosure; }
long CertifiedReal::precision_bits() const { return node_->bits; }
std::optional<BigRat> CertifiedReal::exact_value() const { return exact_of(*node_); }
bool CertifiedReal::same_expression(const CertifiedReal& o) const { return same_tree(node_, o.node_); }

CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b)
{
    return CertifiedReal(make_op(Kind::Add, a.node_, b.node_));
}
CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b)
{
    return CertifiedReal(make_op(Kind::Sub, a.node_, b.node_));
}
CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b)
{
    return CertifiedReal(make_op(Kind::Mul, a.node_, b.node_));
}
CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b)
{
    return CertifiedReal(make_op(Kind::Div, a.node_, b.node_));
}
CertifiedReal operator-(const CertifiedReal& a) { return CertifiedReal(make_op(Kind::Neg, a.node_, nullptr)); }
CertifiedReal abs(const CertifiedReal& a) { return CertifiedReal(make_op(Kind::Abs, a.node_, nullptr)); }
CertifiedReal sqrt(const CertifiedReal& a) { return nth_root(a, 2); }
CertifiedReal nth_root(const CertifiedReal& a, unsigned n)
{
    return CertifiedReal(make_op(Kind::NthRoot, a.node_, nullptr, n));
}

CertifiedReal refine(const CertifiedReal& x, long target_bits)
{
    if (x.enclosure().meets_relative_width(target_bits)) return x;
    for (long bits = target_bits + 16; bits <= kMaxBits; bits = bits * 3 / 2) {
        try {
            CertifiedReal y(evaluate(x.node_, bits));
            if (y.enclosure().meets_relative_width(target_bits)) return y;
        } catch (const std::domain_error&) {
        }
    }
    throw std::runtime_error("CertifiedReal: refinement did not converge");
}

Ordering compare_strict(const CertifiedReal& x, const CertifiedReal& y, long escalation_limit)
{
    auto separated = [](const CertifiedReal& a, const CertifiedReal& b) -> std::optional<Ordering> {
        if (a.enclosure().certainly_less(b.enclosure())) return Ordering::Less;
        if (b.enclosure().certainly_less(a.enclosure())) return Ordering::Greater;
        return std::nullopt;
    };
    if (auto r = separated(x, y)) return *r;
    if (x.same_expression(y)) return Ordering::EqualAsExact;
    const auto ex = x.exact_value();
    const auto ey = y.exact_value();
    if (ex && ey) {
        if (*ex < *ey) return Ordering::Less;
        if (*ex > *ey) return Ordering::Greater;
        return Ordering::EqualAsExact;
    }
    CertifiedReal a = x, b = y;
    for (long bits = 64; bits <= escalation_limit; bits *= 2) {
        a = refine(a, bits);
        b = refine(b, bits);
        if (auto r = separated(a, b)) return *r;
    }
    return Ordering::Undecided;
}

}  // namespace cubicmahler::numerics
