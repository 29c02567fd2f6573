#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace gendo {

using Elem = std::uint32_t;

/// A small finite field. Elements are the integers 0..order-1; for prime
/// fields they are residues, for table fields they index the supplied tables.
/// Copies share the underlying tables.
class Field {
public:
    enum class Kind { Prime, Table };

    /// Prime field F_p, p prime and at most 2^16.
    static Field prime(std::uint32_t p);

    /// A field given by explicit tables; `add` and `mul` are order*order,
    /// row-major. Element 0 must be the additive and 1 the multiplicative
    /// identity. The axioms are checked.
    static Field from_tables(std::string name, std::uint32_t order, std::vector<Elem> add,
                             std::vector<Elem> mul);

    /// GF(4) = F_2[w]/(w^2+w+1), elements {0, 1, w=2, w^2=3}.
    static Field gf4();

    /// "2", "5", "GF4"/"gf4", "4".
    static Field parse(const std::string& spec);

    Kind kind() const { return kind_; }
    std::uint32_t order() const { return order_; }
    std::uint32_t characteristic() const { return char_; }
    const std::string& name() const { return name_; }

    Elem add(Elem a, Elem b) const
    {
        if (kind_ == Kind::Prime) {
            Elem s = a + b;
            return s >= order_ ? s - order_ : s;
        }
        return tab_->add[a * order_ + b];
    }
    Elem neg(Elem a) const
    {
        if (kind_ == Kind::Prime) return a == 0 ? 0 : order_ - a;
        return tab_->neg[a];
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const
    {
        if (kind_ == Kind::Prime)
            return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % order_);
        return tab_->mul[a * order_ + b];
    }
    /// a must be nonzero.
    Elem inv(Elem a) const { return tab_->inv[a]; }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool contains(Elem a) const { return a < order_; }

    /// Canonical reduction of an integer (prime fields: residue mod p; table
    /// fields: n·1 in the prime subfield).
    Elem from_int(long long n) const;

    friend bool operator==(const Field& a, const Field& b)
    {
        return a.kind_ == b.kind_ && a.order_ == b.order_ && a.name_ == b.name_;
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    struct Tables {
        std::vector<Elem> add, mul, neg, inv;
    };
    Kind kind_ = Kind::Prime;
    std::uint32_t order_ = 2;
    std::uint32_t char_ = 2;
    std::string name_;
    std::shared_ptr<const Tables> tab_;
};

}  // namespace gendo
