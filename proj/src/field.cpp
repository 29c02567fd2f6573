#include "gendo/field.hpp"

#include "gendo/error.hpp"

#include <algorithm>
#include <cctype>

namespace gendo {

namespace {

bool is_prime(std::uint32_t p)
{
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Field Field::prime(std::uint32_t p)
{
    if (!is_prime(p) || p > (1u << 16))
        throw Error(ErrorKind::InvalidInput, "field order must be a prime <= 65536, got " + std::to_string(p));
    Field f;
    f.kind_ = Kind::Prime;
    f.order_ = p;
    f.char_ = p;
    f.name_ = "F" + std::to_string(p);
    auto t = std::make_shared<Tables>();
    t->inv.assign(p, 0);
    // inverses by the recurrence inv(a) = -(p/a) * inv(p mod a)
    if (p > 1) t->inv[1] = 1;
    for (std::uint64_t a = 2; a < p; ++a)
        t->inv[a] = static_cast<Elem>((p - (p / a) * t->inv[p % a] % p) % p);
    f.tab_ = std::move(t);
    return f;
}

Field Field::from_tables(std::string name, std::uint32_t order, std::vector<Elem> add,
                         std::vector<Elem> mul)
{
    const std::size_t q = order;
    if (order < 2 || add.size() != q * q || mul.size() != q * q)
        throw Error(ErrorKind::InvalidInput, "field tables have wrong shape");
    auto t = std::make_shared<Tables>();
    t->add = std::move(add);
    t->mul = std::move(mul);
    t->neg.assign(q, q);
    t->inv.assign(q, 0);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) {
            if (t->add[a * q + b] >= q || t->mul[a * q + b] >= q)
                throw Error(ErrorKind::InvalidInput, "field table entry out of range");
            if (t->add[a * q + b] == 0) t->neg[a] = static_cast<Elem>(b);
            if (a != 0 && t->mul[a * q + b] == 1) t->inv[a] = static_cast<Elem>(b);
        }
    for (std::size_t a = 0; a < q; ++a) {
        if (t->neg[a] == q) throw Error(ErrorKind::InvalidInput, "field table: missing additive inverse");
        if (a != 0 && t->mul[a * q + t->inv[a]] != 1)
            throw Error(ErrorKind::InvalidInput, "field table: missing multiplicative inverse");
    }
    Field f;
    f.kind_ = Kind::Table;
    f.order_ = order;
    f.name_ = std::move(name);
    f.tab_ = std::move(t);
    // characteristic = additive order of 1
    Elem x = 1;
    std::uint32_t c = 1;
    while (x != 0) {
        x = f.add(x, 1);
        ++c;
    }
    f.char_ = c;
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b)
            for (std::size_t c2 = 0; c2 < q; ++c2) {
                auto A = static_cast<Elem>(a), B = static_cast<Elem>(b), C = static_cast<Elem>(c2);
                if (f.add(f.add(A, B), C) != f.add(A, f.add(B, C)) || f.mul(f.mul(A, B), C) != f.mul(A, f.mul(B, C)) ||
                    f.mul(A, f.add(B, C)) != f.add(f.mul(A, B), f.mul(A, C)) || f.add(A, B) != f.add(B, A) ||
                    f.mul(A, B) != f.mul(B, A))
                    throw Error(ErrorKind::InvalidInput, "field tables violate the field axioms");
            }
    return f;
}

Field Field::gf4()
{
    // 0, 1, w, w^2 = w + 1
    std::vector<Elem> add = {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
    std::vector<Elem> mul = {0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 3, 1, 0, 3, 1, 2};
    static const Field f = from_tables("GF4", 4, std::move(add), std::move(mul));
    return f;
}

Field Field::parse(const std::string& spec)
{
    std::string s;
    for (char c : spec) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "gf4" || s == "4" || s == "gf(4)" || s == "f4") return gf4();
    if (!s.empty() && (s[0] == 'f')) s = s.substr(1);
    if (s.rfind("gf", 0) == 0) s = s.substr(2);
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw Error(ErrorKind::InvalidInput, "cannot parse field spec '" + spec + "'");
    return prime(static_cast<std::uint32_t>(std::stoul(s)));
}

Elem Field::from_int(long long n) const
{
    if (kind_ == Kind::Prime) {
        long long r = n % static_cast<long long>(order_);
        if (r < 0) r += order_;
        return static_cast<Elem>(r);
    }
    long long r = n % static_cast<long long>(char_);
    if (r < 0) r += char_;
    Elem x = 0;
    for (long long i = 0; i < r; ++i) x = add(x, 1);
    return x;
}

}  // namespace gendo
