#include "tcw/symfun.hpp"

#include <algorithm>
#include <numeric>

#include "tcw/error.hpp"

namespace tcw {

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

namespace {

void gen_partitions(int rest, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(rest, max_part); part >= 1; --part) {
        cur.push_back(part);
        gen_partitions(rest - part, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
    std::vector<Partition> out;
    if (k < 0) return out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    Partition cur;
    gen_partitions(k, k, cur, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

std::vector<Partition> partitions_up_to(int k) {
    std::vector<Partition> out;
    for (int w = 0; w <= k; ++w) {
        auto pw = partitions_of(w);
        out.insert(out.end(), pw.begin(), pw.end());
    }
    return out;
}

std::string partition_key(const Partition& p) {
    if (p.empty()) return "1";
    // Factors ascending by part: counts of each value.
    std::map<int, int> mult;
    for (int v : p) ++mult[v];
    std::string key;
    for (const auto& [part, count] : mult) {
        if (!key.empty()) key += "*";
        key += "c" + std::to_string(part);
        if (count > 1) key += "^" + std::to_string(count);
    }
    return key;
}

Partition parse_partition_key(const std::string& key) {
    Partition p;
    if (key == "1") return p;
    size_t pos = 0;
    while (pos < key.size()) {
        if (key[pos] != 'c') fail(Errc::invalid_input, "bad Chern monomial key: " + key);
        ++pos;
        size_t start = pos;
        while (pos < key.size() && isdigit(key[pos])) ++pos;
        if (pos == start) fail(Errc::invalid_input, "bad Chern monomial key: " + key);
        int part = std::stoi(key.substr(start, pos - start));
        int count = 1;
        if (pos < key.size() && key[pos] == '^') {
            ++pos;
            start = pos;
            while (pos < key.size() && isdigit(key[pos])) ++pos;
            if (pos == start) fail(Errc::invalid_input, "bad Chern monomial key: " + key);
            count = std::stoi(key.substr(start, pos - start));
        }
        if (part < 1 || count < 1) fail(Errc::invalid_input, "bad Chern monomial key: " + key);
        for (int i = 0; i < count; ++i) p.push_back(part);
        if (pos < key.size()) {
            if (key[pos] != '*') fail(Errc::invalid_input, "bad Chern monomial key: " + key);
            ++pos;
        }
    }
    std::sort(p.rbegin(), p.rend());
    return p;
}

Series Series::one(int vars, int max_degree) {
    Series s(vars, max_degree);
    s.terms_[std::vector<int>(vars, 0)] = 1;
    return s;
}

Series Series::variable(int vars, int max_degree, int i) {
    Series s(vars, max_degree);
    if (max_degree >= 1) {
        std::vector<int> e(vars, 0);
        e[i] = 1;
        s.terms_[e] = 1;
    }
    return s;
}

Series Series::univariate(int vars, int max_degree, int i, const RatVec& coeffs) {
    Series s(vars, max_degree);
    for (size_t d = 0; d < coeffs.size() && static_cast<int>(d) <= max_degree; ++d) {
        if (coeffs[d] == 0) continue;
        std::vector<int> e(vars, 0);
        e[i] = static_cast<int>(d);
        s.terms_[e] = coeffs[d];
    }
    return s;
}

void Series::add_term(const std::vector<int>& exp, const Rat& c) {
    if (c == 0) return;
    int deg = std::accumulate(exp.begin(), exp.end(), 0);
    if (deg > max_degree_) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_[exp] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Series& Series::operator+=(const Series& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Series& Series::operator-=(const Series& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Series Series::operator*(const Series& o) const {
    Series out(vars_, std::min(max_degree_, o.max_degree_));
    std::vector<int> e(vars_);
    for (const auto& [ea, ca] : terms_) {
        int da = std::accumulate(ea.begin(), ea.end(), 0);
        for (const auto& [eb, cb] : o.terms_) {
            int db = std::accumulate(eb.begin(), eb.end(), 0);
            if (da + db > out.max_degree_) continue;
            for (int i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Series& Series::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Series Series::degree_part(int d) const {
    Series out(vars_, max_degree_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == d) out.terms_[e] = c;
    return out;
}

namespace {

std::vector<int> orbit_key(std::vector<int> exp) {
    std::sort(exp.rbegin(), exp.rend());
    while (!exp.empty() && exp.back() == 0) exp.pop_back();
    return exp;
}

// All distinct rearrangements of the key padded to `vars` entries.
std::vector<std::vector<int>> orbit_members(const std::vector<int>& key, int vars) {
    std::vector<int> e(vars, 0);
    std::copy(key.begin(), key.end(), e.begin());
    std::sort(e.begin(), e.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(e);
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

}  // namespace

SymmetricSeries SymmetricSeries::from_series(const Series& s) {
    SymmetricSeries out(s.vars(), s.max_degree());
    for (const auto& [e, c] : s.terms()) out.orbits_[orbit_key(e)] = c;
    // Symmetry check: every member of every orbit carries the same coefficient.
    for (const auto& [key, c] : out.orbits_) {
        for (const auto& member : orbit_members(key, s.vars())) {
            auto it = s.terms().find(member);
            if (it == s.terms().end() || it->second != c)
                fail(Errc::invalid_input, "series is not symmetric under root permutations");
        }
    }
    return out;
}

Series SymmetricSeries::expand() const {
    Series s(vars_, max_degree_);
    for (const auto& [key, c] : orbits_)
        for (const auto& member : orbit_members(key, vars_)) s.add_term(member, c);
    return s;
}

SymmetricSeries SymmetricSeries::operator*(const SymmetricSeries& o) const {
    return from_series(expand() * o.expand());
}

SymmetricSeries& SymmetricSeries::operator+=(const SymmetricSeries& o) {
    for (const auto& [key, c] : o.orbits_) {
        auto it = orbits_.find(key);
        if (it == orbits_.end()) {
            if (c != 0) orbits_[key] = c;
        } else {
            it->second += c;
            if (it->second == 0) orbits_.erase(it);
        }
    }
    return *this;
}

SymmetricSeries SymmetricSeries::degree_part(int d) const {
    SymmetricSeries out(vars_, max_degree_);
    for (const auto& [key, c] : orbits_)
        if (std::accumulate(key.begin(), key.end(), 0) == d) out.orbits_[key] = c;
    return out;
}

Series monomial_symmetric(int vars, int max_degree, const Partition& mu) {
    Series s(vars, max_degree);
    if (mu.empty()) return Series::one(vars, max_degree);
    if (static_cast<int>(mu.size()) > vars) return s;  // zero in this many variables
    std::vector<int> key(mu.begin(), mu.end());
    for (const auto& member : orbit_members(key, vars)) s.add_term(member, 1);
    return s;
}

Series elementary_symmetric(int vars, int max_degree, int k) {
    if (k == 0) return Series::one(vars, max_degree);
    return monomial_symmetric(vars, max_degree, Partition(k, 1));
}

Series elementary_symmetric_of(const std::vector<Series>& args, int k) {
    if (args.empty()) fail(Errc::invalid_input, "elementary_symmetric_of: no arguments");
    const int vars = args[0].vars();
    const int deg = args[0].max_degree();
    // e_j over a growing prefix: e[j] += t * e[j-1] per new argument t.
    std::vector<Series> e(k + 1, Series(vars, deg));
    e[0] = Series::one(vars, deg);
    for (size_t i = 0; i < args.size(); ++i) {
        for (int j = std::min<int>(k, static_cast<int>(i) + 1); j >= 1; --j) {
            e[j] += args[i] * e[j - 1];
        }
    }
    return e[k];
}

namespace {

Partition conjugate(const Partition& mu) {
    Partition out;
    if (mu.empty()) return out;
    for (int i = 1; i <= mu[0]; ++i) {
        int count = 0;
        for (int part : mu)
            if (part >= i) ++count;
        out.push_back(count);
    }
    return out;
}

}  // namespace

std::map<Partition, Rat> to_elementary_basis(const Series& sym, int d) {
    std::map<Partition, Rat> out;
    Series work = sym.degree_part(d);
    long guard = 0;
    while (!work.is_zero()) {
        if (++guard > 100000) fail(Errc::invalid_input, "to_elementary_basis did not terminate");
        // Lex-greatest monomial; symmetric input makes its exponents weakly
        // decreasing, i.e. a partition.
        auto it = std::prev(work.terms().end());
        std::vector<int> alpha = it->first;
        Rat c = it->second;
        Partition mu = orbit_key(alpha);
        if (std::is_sorted(alpha.begin(), alpha.end(), std::greater<int>()) == false)
            fail(Errc::invalid_input, "to_elementary_basis: input is not symmetric");
        Partition lambda = conjugate(mu);
        Series prod = Series::one(sym.vars(), sym.max_degree());
        for (int part : lambda) prod = prod * elementary_symmetric(sym.vars(), sym.max_degree(), part);
        prod *= c;
        work -= prod;
        out[lambda] += c;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

Series milnor_s_polynomial(const Partition& omega, const std::vector<Series>& args) {
    if (args.empty()) fail(Errc::invalid_input, "milnor_s_polynomial: no arguments");
    const int vars = args[0].vars();
    const int deg = args[0].max_degree();
    if (omega.empty()) return Series::one(vars, deg);

    const int w = weight(omega);
    Series morb = monomial_symmetric(vars, deg, omega);
    auto in_e = to_elementary_basis(morb, w);

    Series result(vars, deg);
    for (const auto& [lambda, c] : in_e) {
        Series prod = Series::one(vars, deg);
        for (int part : lambda) {
            if (part > static_cast<int>(args.size()))
                fail(Errc::invalid_input, "milnor_s_polynomial: not enough arguments");
            prod = prod * args[part - 1];
        }
        prod *= c;
        result += prod;
    }
    return result;
}

}  // namespace tcw
