#include "nielsen/fgab.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

namespace nielsen {

namespace checked {

Int add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

Int sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

Int mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

Int neg(Int a)
{
    if (a == std::numeric_limits<Int>::min())
        throw OverflowError("integer overflow in negation");
    return -a;
}

Int mod(Int a, Int m)
{
    if (m <= 0)
        throw DomainError("modulus must be positive");
    Int r = a % m;
    return r < 0 ? r + m : r;
}

Int gcd(Int a, Int b)
{
    if (a == std::numeric_limits<Int>::min() || b == std::numeric_limits<Int>::min())
        throw OverflowError("integer overflow in gcd");
    return std::gcd(a, b);
}

Int lcm(Int a, Int b)
{
    if (a == 0 || b == 0)
        return 0;
    Int g = gcd(a, b);
    return std::abs(mul(a / g, b));
}

}  // namespace checked

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, Int fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill)
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw DomainError("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

std::vector<Int> IntMatrix::column(std::size_t c) const
{
    std::vector<Int> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

void IntMatrix::set_column(std::size_t c, std::span<const Int> values)
{
    if (values.size() != rows_)
        throw DomainError("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = values[r];
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw DomainError("matrix shape mismatch in product");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Int aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) = checked::add(out(i, j), checked::mul(aik, b(k, j)));
        }
    return out;
}

std::vector<Int> operator*(const IntMatrix& a, std::span<const Int> x)
{
    if (a.cols() != x.size())
        throw DomainError("matrix-vector shape mismatch");
    std::vector<Int> out(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            out[i] = checked::add(out[i], checked::mul(a(i, k), x[k]));
    return out;
}

Int determinant(const IntMatrix& in)
{
    if (in.rows() != in.cols())
        throw DomainError("determinant of non-square matrix");
    const std::size_t n = in.rows();
    if (n == 0)
        return 1;
    IntMatrix a = in;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = checked::sub(checked::mul(a(i, j), a(k, k)), checked::mul(a(i, k), a(k, j)));
                a(i, j) = num / prev;
            }
        prev = a(k, k);
    }
    return checked::mul(sign, a(n - 1, n - 1));
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, Int q)
{
    if (q == 0)
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(dst, j) = checked::sub(m(dst, j), checked::mul(q, m(src, j)));
}

// col_dst -= q * col_src
void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, Int q)
{
    if (q == 0)
        return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, dst) = checked::sub(m(i, dst), checked::mul(q, m(i, src)));
}

// Quotient rounded to nearest, which keeps remainders and transform entries small.
Int round_div(Int a, Int b)
{
    Int q = a / b;
    Int r = a - q * b;
    if (2 * std::abs(r) > std::abs(b))
        q += ((r < 0) == (b < 0)) ? 1 : -1;
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    SmithForm out{IntMatrix::identity(rows), m, IntMatrix::identity(cols), 0};
    IntMatrix& A = out.D;
    IntMatrix& U = out.U;
    IntMatrix& V = out.V;

    const std::size_t diag = std::min(rows, cols);
    for (std::size_t t = 0; t < diag; ++t) {
        for (;;) {
            // Smallest nonzero |entry| in the trailing block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            Int best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    Int v = A(i, j);
                    if (v != 0 && (best == 0 || std::abs(v) < best)) {
                        best = std::abs(v);
                        pr = i;
                        pc = j;
                    }
                }
            if (best == 0)
                return out;
            if (pr != t) {
                swap_rows(A, pr, t);
                swap_rows(U, pr, t);
            }
            if (pc != t) {
                swap_cols(A, pc, t);
                swap_cols(V, pc, t);
            }

            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                Int q = round_div(A(i, t), A(t, t));
                row_axpy(A, i, t, q);
                row_axpy(U, i, t, q);
                dirty = dirty || A(i, t) != 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                Int q = round_div(A(t, j), A(t, t));
                col_axpy(A, j, t, q);
                col_axpy(V, j, t, q);
                dirty = dirty || A(t, j) != 0;
            }
            if (dirty)
                continue;

            // Divisibility: fold an offending row into the pivot row and retry.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (A(i, j) % A(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            row_axpy(A, t, bad, -1);
            row_axpy(U, t, bad, -1);
        }
        if (A(t, t) < 0) {
            for (std::size_t j = 0; j < cols; ++j)
                A(t, j) = checked::neg(A(t, j));
            for (std::size_t j = 0; j < rows; ++j)
                U(t, j) = checked::neg(U(t, j));
        }
        out.rank = t + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// FgAbGroup

FgAbGroup::FgAbGroup(int free_rank, std::vector<Int> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion))
{
    if (free_rank_ < 0)
        throw DomainError("negative free rank");
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2)
            throw DomainError("torsion orders must be >= 2");
        if (i + 1 < torsion_.size() && torsion_[i + 1] % torsion_[i] != 0)
            throw DomainError("torsion orders violate divisibility: " + std::to_string(torsion_[i]) +
                              " does not divide " + std::to_string(torsion_[i + 1]));
    }
}

FgAbGroup FgAbGroup::cyclic(Int n)
{
    if (n < 0)
        throw DomainError("negative cyclic order");
    if (n == 0)
        return integers();
    if (n == 1)
        return trivial();
    return FgAbGroup(0, {n});
}

FgAbGroup FgAbGroup::from_orders(int free_rank, std::span<const Int> orders)
{
    IntMatrix diag(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] < 1)
            throw DomainError("cyclic orders must be >= 1");
        diag(i, i) = orders[i];
    }
    SmithForm snf = smith_normal_form(diag);
    std::vector<Int> torsion;
    for (std::size_t i = 0; i < orders.size(); ++i)
        if (snf.D(i, i) > 1)
            torsion.push_back(snf.D(i, i));
    return FgAbGroup(free_rank, std::move(torsion));
}

std::optional<Int> FgAbGroup::order() const
{
    if (free_rank_ > 0)
        return std::nullopt;
    Int n = 1;
    for (Int t : torsion_)
        n = checked::mul(n, t);
    return n;
}

Int FgAbGroup::generator_order(std::size_t i) const
{
    if (i >= num_generators())
        throw DomainError("generator index out of range");
    if (i < static_cast<std::size_t>(free_rank_))
        return 0;
    return torsion_[i - free_rank_];
}

Int FgAbGroup::exponent() const
{
    return torsion_.empty() ? 1 : torsion_.back();
}

GroupElement FgAbGroup::zero() const
{
    return GroupElement(*this, std::vector<Int>(num_generators(), 0));
}

GroupElement FgAbGroup::generator(std::size_t i) const
{
    if (i >= num_generators())
        throw DomainError("generator index out of range");
    std::vector<Int> c(num_generators(), 0);
    c[i] = 1;
    return GroupElement(*this, std::move(c));
}

GroupElement FgAbGroup::element(std::vector<Int> coeffs) const
{
    return GroupElement(*this, std::move(coeffs));
}

std::string FgAbGroup::to_string() const
{
    if (is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < free_rank_; ++i) {
        os << (first ? "" : " + ") << "Z";
        first = false;
    }
    for (Int t : torsion_) {
        os << (first ? "" : " + ") << "Z_" << t;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(FgAbGroup parent, std::vector<Int> coeffs)
    : parent_(std::move(parent)), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != parent_.num_generators())
        throw DomainError("coefficient vector has length " + std::to_string(coeffs_.size()) + ", group " +
                          parent_.to_string() + " needs " + std::to_string(parent_.num_generators()));
    const std::size_t f = static_cast<std::size_t>(parent_.free_rank());
    for (std::size_t i = f; i < coeffs_.size(); ++i)
        coeffs_[i] = checked::mod(coeffs_[i], parent_.torsion()[i - f]);
}

bool GroupElement::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c == 0; });
}

void GroupElement::check_same_parent(const GroupElement& other) const
{
    if (parent_ != other.parent_)
        throw DomainError("group element parent mismatch: " + parent_.to_string() + " vs " +
                          other.parent_.to_string());
}

GroupElement GroupElement::operator+(const GroupElement& other) const
{
    check_same_parent(other);
    std::vector<Int> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = checked::add(coeffs_[i], other.coeffs_[i]);
    return GroupElement(parent_, std::move(c));
}

GroupElement GroupElement::operator-(const GroupElement& other) const
{
    check_same_parent(other);
    std::vector<Int> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = checked::sub(coeffs_[i], other.coeffs_[i]);
    return GroupElement(parent_, std::move(c));
}

GroupElement GroupElement::operator-() const
{
    return scale(-1);
}

GroupElement GroupElement::scale(Int k) const
{
    std::vector<Int> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = checked::mul(k, coeffs_[i]);
    return GroupElement(parent_, std::move(c));
}

std::string GroupElement::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        os << (i ? "," : "") << coeffs_[i];
    os << ")";
    return os.str();
}

std::optional<Int> element_order(const GroupElement& a)
{
    const auto& g = a.parent();
    const std::size_t f = static_cast<std::size_t>(g.free_rank());
    for (std::size_t i = 0; i < f; ++i)
        if (a.coeffs()[i] != 0)
            return std::nullopt;
    Int order = 1;
    for (std::size_t i = f; i < a.coeffs().size(); ++i) {
        Int t = g.torsion()[i - f];
        order = checked::lcm(order, t / checked::gcd(a.coeffs()[i], t));
    }
    return order;
}

// ---------------------------------------------------------------------------
// Homomorphism

bool column_respects_order(const FgAbGroup& codomain, std::span<const Int> column, Int generator_order)
{
    if (generator_order == 0)
        return true;
    const std::size_t f = static_cast<std::size_t>(codomain.free_rank());
    for (std::size_t i = 0; i < column.size(); ++i) {
        if (i < f) {
            if (column[i] != 0)
                return false;
        } else if (checked::mod(checked::mul(generator_order, column[i]), codomain.torsion()[i - f]) != 0) {
            return false;
        }
    }
    return true;
}

bool hom_forced_zero(Int order, const FgAbGroup& target)
{
    if (order <= 0)
        return false;
    return std::all_of(target.torsion().begin(), target.torsion().end(),
                       [order](Int t) { return checked::gcd(order, t) == 1; });
}

Homomorphism::Homomorphism(FgAbGroup domain, FgAbGroup codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix))
{
    if (matrix_.rows() != codomain_.num_generators() || matrix_.cols() != domain_.num_generators())
        throw DomainError("homomorphism matrix has wrong shape");
    const std::size_t f = static_cast<std::size_t>(codomain_.free_rank());
    for (std::size_t j = 0; j < matrix_.cols(); ++j) {
        for (std::size_t i = f; i < matrix_.rows(); ++i)
            matrix_(i, j) = checked::mod(matrix_(i, j), codomain_.torsion()[i - f]);
        auto col = matrix_.column(j);
        if (!column_respects_order(codomain_, col, domain_.generator_order(j)))
            throw DomainError("homomorphism not well defined: generator " + std::to_string(j) + " of order " +
                              std::to_string(domain_.generator_order(j)) + " maps to an element of other order in " +
                              codomain_.to_string());
    }
}

Homomorphism Homomorphism::zero(FgAbGroup domain, FgAbGroup codomain)
{
    IntMatrix m(codomain.num_generators(), domain.num_generators());
    return Homomorphism(std::move(domain), std::move(codomain), std::move(m));
}

Homomorphism Homomorphism::identity(FgAbGroup group)
{
    IntMatrix m = IntMatrix::identity(group.num_generators());
    return Homomorphism(group, group, std::move(m));
}

GroupElement Homomorphism::operator()(const GroupElement& x) const
{
    if (x.parent() != domain_)
        throw DomainError("homomorphism applied outside its domain");
    return GroupElement(codomain_, matrix_ * std::span<const Int>(x.coeffs()));
}

GroupElement hom_apply(const Homomorphism& h, const GroupElement& x)
{
    return h(x);
}

Homomorphism hom_compose(const Homomorphism& g, const Homomorphism& h)
{
    if (h.codomain() != g.domain())
        throw DomainError("homomorphisms are not composable");
    return Homomorphism(h.domain(), g.codomain(), g.matrix() * h.matrix());
}

FgAbGroup direct_sum(std::span<const FgAbGroup> groups)
{
    int free = 0;
    std::vector<Int> orders;
    for (const auto& g : groups) {
        free += g.free_rank();
        orders.insert(orders.end(), g.torsion().begin(), g.torsion().end());
    }
    return FgAbGroup::from_orders(free, orders);
}

// ---------------------------------------------------------------------------
// Subgroups

namespace {

// Columns: subgroup generators followed by the torsion relations of the ambient group.
IntMatrix presentation_matrix(const FgAbGroup& ambient, const std::vector<GroupElement>& gens)
{
    const std::size_t n = ambient.num_generators();
    const std::size_t f = static_cast<std::size_t>(ambient.free_rank());
    const std::size_t t = ambient.torsion().size();
    IntMatrix a(n, gens.size() + t);
    for (std::size_t j = 0; j < gens.size(); ++j)
        a.set_column(j, gens[j].coeffs());
    for (std::size_t k = 0; k < t; ++k)
        a(f + k, gens.size() + k) = ambient.torsion()[k];
    return a;
}

// Order of the cokernel Z^rows / im(a); nullopt when infinite.
std::optional<Int> cokernel_order(const IntMatrix& a)
{
    SmithForm snf = smith_normal_form(a);
    if (snf.rank < a.rows())
        return std::nullopt;
    Int n = 1;
    for (std::size_t i = 0; i < snf.rank; ++i)
        n = checked::mul(n, snf.D(i, i));
    return n;
}

}  // namespace

Subgroup::Subgroup(FgAbGroup ambient, std::vector<GroupElement> generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators))
{
    for (const auto& g : generators_)
        if (g.parent() != ambient_)
            throw DomainError("subgroup generator outside the ambient group");
}

Subgroup Subgroup::trivial(FgAbGroup ambient)
{
    return Subgroup(std::move(ambient), {});
}

Subgroup Subgroup::whole(FgAbGroup ambient)
{
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < ambient.num_generators(); ++i)
        gens.push_back(ambient.generator(i));
    return Subgroup(std::move(ambient), std::move(gens));
}

bool Subgroup::contains(const GroupElement& x) const
{
    if (x.parent() != ambient_)
        throw DomainError("membership test with element of another group");
    if (x.is_zero())
        return true;
    IntMatrix a = presentation_matrix(ambient_, generators_);
    SmithForm snf = smith_normal_form(a);
    std::vector<Int> ux = snf.U * std::span<const Int>(x.coeffs());
    for (std::size_t i = 0; i < ux.size(); ++i) {
        Int d = i < snf.rank ? snf.D(i, i) : 0;
        if (d == 0) {
            if (ux[i] != 0)
                return false;
        } else if (ux[i] % d != 0) {
            return false;
        }
    }
    return true;
}

bool Subgroup::is_trivial() const
{
    return std::all_of(generators_.begin(), generators_.end(), [](const GroupElement& g) { return g.is_zero(); });
}

bool Subgroup::is_whole() const
{
    for (std::size_t i = 0; i < ambient_.num_generators(); ++i)
        if (!contains(ambient_.generator(i)))
            return false;
    return true;
}

std::optional<Int> Subgroup::order() const
{
    const std::size_t f = static_cast<std::size_t>(ambient_.free_rank());
    for (const auto& g : generators_)
        for (std::size_t i = 0; i < f; ++i)
            if (g.coeffs()[i] != 0)
                return std::nullopt;
    // All generators are torsion; work inside the torsion subgroup.
    FgAbGroup tors(0, ambient_.torsion());
    std::vector<GroupElement> inner;
    for (const auto& g : generators_)
        inner.push_back(tors.element(std::vector<Int>(g.coeffs().begin() + static_cast<std::ptrdiff_t>(f), g.coeffs().end())));
    Int total = tors.order().value();
    Int quotient = cokernel_order(presentation_matrix(tors, inner)).value();
    return total / quotient;
}

std::string Subgroup::to_string() const
{
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < generators_.size(); ++i)
        os << (i ? ", " : "") << generators_[i].to_string();
    os << "> in " << ambient_.to_string();
    return os.str();
}

std::string to_string(SubgroupRelation r)
{
    switch (r) {
    case SubgroupRelation::Equal: return "Equal";
    case SubgroupRelation::ProperSub: return "ProperSub";
    case SubgroupRelation::ProperSuper: return "ProperSuper";
    case SubgroupRelation::Incomparable: return "Incomparable";
    }
    return "?";
}

Subgroup joint_kernel(const FgAbGroup& domain, std::span<const Homomorphism> maps)
{
    const std::size_t n = domain.num_generators();
    std::size_t rows = 0, relations = 0;
    for (const auto& h : maps) {
        if (h.domain() != domain)
            throw DomainError("joint kernel of maps with different domains");
        rows += h.codomain().num_generators();
        relations += h.codomain().torsion().size();
    }

    // Solve M y + R z = 0 over the integers; the y-parts generate the kernel.
    IntMatrix b(rows, n + relations);
    std::size_t row0 = 0, rel = n;
    for (const auto& h : maps) {
        const FgAbGroup& cod = h.codomain();
        const std::size_t f = static_cast<std::size_t>(cod.free_rank());
        for (std::size_t i = 0; i < cod.num_generators(); ++i)
            for (std::size_t j = 0; j < n; ++j)
                b(row0 + i, j) = h.matrix()(i, j);
        for (std::size_t k = 0; k < cod.torsion().size(); ++k)
            b(row0 + f + k, rel++) = cod.torsion()[k];
        row0 += cod.num_generators();
    }

    SmithForm snf = smith_normal_form(b);
    std::vector<GroupElement> gens;
    for (std::size_t c = snf.rank; c < n + relations; ++c) {
        std::vector<Int> y(n);
        for (std::size_t j = 0; j < n; ++j)
            y[j] = snf.V(j, c);
        GroupElement e = domain.element(std::move(y));
        if (!e.is_zero())
            gens.push_back(std::move(e));
    }
    return Subgroup(domain, std::move(gens));
}

Subgroup kernel(const Homomorphism& h)
{
    return joint_kernel(h.domain(), std::span<const Homomorphism>(&h, 1));
}

Subgroup image(const Homomorphism& h)
{
    std::vector<GroupElement> gens;
    for (std::size_t j = 0; j < h.domain().num_generators(); ++j) {
        GroupElement e = h(h.domain().generator(j));
        if (!e.is_zero())
            gens.push_back(std::move(e));
    }
    return Subgroup(h.codomain(), std::move(gens));
}

bool subgroup_contains(const Subgroup& outer, const Subgroup& inner)
{
    if (outer.ambient() != inner.ambient())
        throw DomainError("subgroups live in different ambient groups");
    return std::all_of(inner.generators().begin(), inner.generators().end(),
                       [&](const GroupElement& g) { return outer.contains(g); });
}

SubgroupRelation subgroup_cmp(const Subgroup& a, const Subgroup& b)
{
    bool a_in_b = subgroup_contains(b, a);
    bool b_in_a = subgroup_contains(a, b);
    if (a_in_b && b_in_a)
        return SubgroupRelation::Equal;
    if (a_in_b)
        return SubgroupRelation::ProperSub;
    if (b_in_a)
        return SubgroupRelation::ProperSuper;
    return SubgroupRelation::Incomparable;
}

}  // namespace nielsen
