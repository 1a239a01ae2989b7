#include "posetsat/element.hpp"

#include "posetsat/errors.hpp"
#include "posetsat/finite_field.hpp"

#include <algorithm>
#include <set>

namespace posetsat {

namespace {

constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

int digit_value(char c) {
    auto pos = kDigits.find(c);
    return pos == std::string_view::npos ? -1 : static_cast<int>(pos);
}

std::vector<int> pivot_columns(int n, const ElementCode& x) {
    std::vector<int> pivots;
    for (int row = 0; row < x.rank; ++row) {
        const std::uint8_t* r = x.payload.data() + row * n;
        int c = 0;
        while (c < n && r[c] == 0) {
            ++c;
        }
        pivots.push_back(c);
    }
    return pivots;
}

}  // namespace

std::size_t ElementCodeHash::operator()(const ElementCode& x) const {
    std::size_t h = static_cast<std::size_t>(x.rank) * 0x9e3779b97f4a7c15ULL;
    for (std::uint8_t b : x.payload) {
        h = (h ^ b) * 0x100000001b3ULL;
    }
    return h;
}

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::less: return "less";
        case Relation::greater: return "greater";
        case Relation::equal: return "equal";
        case Relation::incomparable: return "incomparable";
    }
    return "?";
}

Relation compare(const FamilySpec& spec, const ElementCode& x, const ElementCode& y) {
    if (x.payload.size() != y.payload.size() && spec.family != Family::subspace) {
        throw ValidationError("elements have different lengths");
    }
    if (x == y) {
        return Relation::equal;
    }
    if (spec.family == Family::subspace) {
        if (x.rank < y.rank && subspace::is_contained(spec.n, spec.q, x, y)) {
            return Relation::less;
        }
        if (y.rank < x.rank && subspace::is_contained(spec.n, spec.q, y, x)) {
            return Relation::greater;
        }
        return Relation::incomparable;
    }
    bool le = true;
    bool ge = true;
    for (std::size_t c = 0; c < x.payload.size(); ++c) {
        le = le && x.payload[c] <= y.payload[c];
        ge = ge && x.payload[c] >= y.payload[c];
    }
    if (le) {
        return Relation::less;
    }
    if (ge) {
        return Relation::greater;
    }
    return Relation::incomparable;
}

std::string encode(const FamilySpec& spec, const ElementCode& x) {
    if (spec.family == Family::subspace) {
        std::string out = "[";
        for (int row = 0; row < x.rank; ++row) {
            if (row > 0) {
                out += '|';
            }
            for (int c = 0; c < spec.n; ++c) {
                out += kDigits[x.payload[row * spec.n + c]];
            }
        }
        return out + "]";
    }
    if (x.payload.empty()) {
        return "()";
    }
    std::string out;
    for (std::uint8_t d : x.payload) {
        out += kDigits[d];
    }
    return out;
}

ElementCode decode(const FamilySpec& spec, std::string_view text) {
    auto bad = [&] { return ValidationError("cannot decode element '" + std::string(text) + "' for " + describe(spec)); };
    ElementCode x;
    if (spec.family == Family::subspace) {
        if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
            throw bad();
        }
        std::string_view body = text.substr(1, text.size() - 2);
        std::vector<std::uint8_t> rows;
        int count = 0;
        while (!body.empty()) {
            auto bar = body.find('|');
            std::string_view row = body.substr(0, bar);
            if (static_cast<int>(row.size()) != spec.n) {
                throw bad();
            }
            for (char c : row) {
                int v = digit_value(c);
                if (v < 0 || v >= spec.q) {
                    throw bad();
                }
                rows.push_back(static_cast<std::uint8_t>(v));
            }
            ++count;
            body = bar == std::string_view::npos ? std::string_view() : body.substr(bar + 1);
        }
        x.rank = count;
        x.payload = std::move(rows);
    } else {
        if (text == "()" && spec.n == 0) {
            return x;
        }
        if (static_cast<int>(text.size()) != spec.n) {
            throw bad();
        }
        int limit = spec.family == Family::boolean ? 1 : spec.r;
        for (char c : text) {
            int v = digit_value(c);
            if (v < 0 || v > limit) {
                throw bad();
            }
            x.payload.push_back(static_cast<std::uint8_t>(v));
            x.rank += v;
        }
    }
    try {
        check_element(spec, x);
    } catch (const ValidationError&) {
        throw bad();
    }
    return x;
}

void check_element(const FamilySpec& spec, const ElementCode& x) {
    if (spec.family != Family::subspace) {
        if (static_cast<int>(x.payload.size()) != spec.n) {
            throw ValidationError("element has wrong number of coordinates");
        }
        int limit = spec.family == Family::boolean ? 1 : spec.r;
        int sum = 0;
        for (std::uint8_t d : x.payload) {
            if (d > limit) {
                throw ValidationError("coordinate out of range");
            }
            sum += d;
        }
        if (sum != x.rank) {
            throw ValidationError("rank does not match coordinates");
        }
        return;
    }
    if (x.rank < 0 || x.rank > spec.n || static_cast<int>(x.payload.size()) != x.rank * spec.n) {
        throw ValidationError("subspace element has wrong shape");
    }
    ElementCode canonical = subspace::reduce(spec.n, spec.q, x.payload);
    if (!(canonical == x)) {
        throw ValidationError("subspace element is not in reduced row echelon form");
    }
}

ElementCode bottom_element(const FamilySpec& spec) {
    if (spec.family == Family::subspace) {
        return ElementCode{};
    }
    return ElementCode{0, std::vector<std::uint8_t>(spec.n, 0)};
}

ElementCode top_element(const FamilySpec& spec) {
    ElementCode x;
    x.rank = spec.top_rank();
    if (spec.family == Family::subspace) {
        x.payload.assign(spec.n * spec.n, 0);
        for (int c = 0; c < spec.n; ++c) {
            x.payload[c * spec.n + c] = 1;
        }
    } else {
        int top = spec.family == Family::boolean ? 1 : spec.r;
        x.payload.assign(spec.n, static_cast<std::uint8_t>(top));
    }
    return x;
}

ElementCode from_digits(std::vector<std::uint8_t> digits) {
    ElementCode x;
    for (std::uint8_t d : digits) {
        x.rank += d;
    }
    x.payload = std::move(digits);
    return x;
}

int count_twos(const ElementCode& x) {
    return static_cast<int>(std::count(x.payload.begin(), x.payload.end(), 2));
}

std::vector<ElementCode> upper_covers(const FamilySpec& spec, const ElementCode& x) {
    std::vector<ElementCode> out;
    if (spec.family != Family::subspace) {
        int limit = spec.family == Family::boolean ? 1 : spec.r;
        for (std::size_t c = 0; c < x.payload.size(); ++c) {
            if (x.payload[c] < limit) {
                ElementCode y = x;
                ++y.payload[c];
                ++y.rank;
                out.push_back(std::move(y));
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    if (x.rank == spec.n) {
        return out;
    }
    const int n = spec.n;
    const int q = spec.q;
    std::set<ElementCode> found;
    std::vector<std::uint8_t> v(n, 0);
    std::vector<int> pivots = pivot_columns(n, x);
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) {
        is_pivot[p] = true;
    }
    // Vectors supported on non-pivot columns represent every coset of x.
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c) {
        if (!is_pivot[c]) {
            free_cols.push_back(c);
        }
    }
    std::vector<std::uint8_t> digits(free_cols.size(), 0);
    while (true) {
        std::size_t t = 0;
        while (t < digits.size() && digits[t] == q - 1) {
            digits[t] = 0;
            ++t;
        }
        if (t == digits.size()) {
            break;
        }
        ++digits[t];
        std::fill(v.begin(), v.end(), 0);
        for (std::size_t s = 0; s < free_cols.size(); ++s) {
            v[free_cols[s]] = digits[s];
        }
        std::vector<std::uint8_t> rows = x.payload;
        rows.insert(rows.end(), v.begin(), v.end());
        found.insert(subspace::reduce(n, q, std::move(rows)));
    }
    out.assign(found.begin(), found.end());
    return out;
}

void for_each_in_level(const FamilySpec& spec, int i, const std::function<void(const ElementCode&)>& fn) {
    if (i < 0 || i > spec.top_rank()) {
        return;
    }
    const int n = spec.n;
    if (spec.family != Family::subspace) {
        int limit = spec.family == Family::boolean ? 1 : spec.r;
        ElementCode x{i, std::vector<std::uint8_t>(n, 0)};
        // Lexicographic order on digit vectors with fixed sum.
        std::function<void(int, int)> rec = [&](int pos, int remaining) {
            if (pos == n) {
                if (remaining == 0) {
                    fn(x);
                }
                return;
            }
            int tail = (n - pos - 1) * limit;
            for (int d = 0; d <= limit && d <= remaining; ++d) {
                if (remaining - d > tail) {
                    continue;
                }
                x.payload[pos] = static_cast<std::uint8_t>(d);
                rec(pos + 1, remaining - d);
            }
            x.payload[pos] = 0;
        };
        rec(0, i);
        return;
    }
    const int q = spec.q;
    std::vector<ElementCode> level;
    // Choose pivot columns, then fill the free entries right of each pivot.
    std::vector<int> pivots(i);
    std::function<void(int, int)> choose = [&](int idx, int start) {
        if (idx == i) {
            std::vector<std::pair<int, int>> free_slots;
            std::vector<bool> is_pivot(n, false);
            for (int p : pivots) {
                is_pivot[p] = true;
            }
            for (int row = 0; row < i; ++row) {
                for (int c = pivots[row] + 1; c < n; ++c) {
                    if (!is_pivot[c]) {
                        free_slots.emplace_back(row, c);
                    }
                }
            }
            ElementCode x{i, std::vector<std::uint8_t>(i * n, 0)};
            for (int row = 0; row < i; ++row) {
                x.payload[row * n + pivots[row]] = 1;
            }
            std::vector<std::uint8_t> digits(free_slots.size(), 0);
            while (true) {
                for (std::size_t s = 0; s < free_slots.size(); ++s) {
                    x.payload[free_slots[s].first * n + free_slots[s].second] = digits[s];
                }
                level.push_back(x);
                std::size_t t = 0;
                while (t < digits.size() && digits[t] == q - 1) {
                    digits[t] = 0;
                    ++t;
                }
                if (t == digits.size()) {
                    break;
                }
                ++digits[t];
            }
            return;
        }
        for (int c = start; c <= n - (i - idx); ++c) {
            pivots[idx] = c;
            choose(idx + 1, c + 1);
        }
    };
    choose(0, 0);
    std::sort(level.begin(), level.end());
    for (const ElementCode& x : level) {
        fn(x);
    }
}

namespace subspace {

ElementCode reduce(int n, int q, std::vector<std::uint8_t> rows) {
    const GaloisField& f = GaloisField::get(q);
    int count = n == 0 ? 0 : static_cast<int>(rows.size()) / n;
    int lead = 0;
    for (int c = 0; c < n && lead < count; ++c) {
        int pivot = -1;
        for (int r = lead; r < count; ++r) {
            if (rows[r * n + c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        if (pivot != lead) {
            std::swap_ranges(rows.begin() + pivot * n, rows.begin() + pivot * n + n, rows.begin() + lead * n);
        }
        std::uint8_t scale = f.inv(rows[lead * n + c]);
        for (int t = 0; t < n; ++t) {
            rows[lead * n + t] = f.mul(rows[lead * n + t], scale);
        }
        for (int r = 0; r < count; ++r) {
            std::uint8_t factor = rows[r * n + c];
            if (r == lead || factor == 0) {
                continue;
            }
            for (int t = 0; t < n; ++t) {
                rows[r * n + t] = f.sub(rows[r * n + t], f.mul(factor, rows[lead * n + t]));
            }
        }
        ++lead;
    }
    rows.resize(lead * n);
    return ElementCode{lead, std::move(rows)};
}

bool contains_vector(int n, int q, const ElementCode& x, const std::uint8_t* v) {
    const GaloisField& f = GaloisField::get(q);
    std::vector<std::uint8_t> w(v, v + n);
    for (int row = 0; row < x.rank; ++row) {
        const std::uint8_t* r = x.payload.data() + row * n;
        int c = 0;
        while (r[c] == 0) {
            ++c;
        }
        std::uint8_t factor = w[c];
        if (factor == 0) {
            continue;
        }
        for (int t = 0; t < n; ++t) {
            w[t] = f.sub(w[t], f.mul(factor, r[t]));
        }
    }
    return std::all_of(w.begin(), w.end(), [](std::uint8_t d) { return d == 0; });
}

bool is_contained(int n, int q, const ElementCode& x, const ElementCode& y) {
    if (x.rank > y.rank) {
        return false;
    }
    for (int row = 0; row < x.rank; ++row) {
        if (!contains_vector(n, q, y, x.payload.data() + row * n)) {
            return false;
        }
    }
    return true;
}

}  // namespace subspace

}  // namespace posetsat
