#pragma once

#include <map>
#include <string>
#include <vector>

#include "tcw/numeric.hpp"

namespace tcw {

/// Integer partition in weakly decreasing order.
using Partition = std::vector<int>;

int weight(const Partition& p);

/// All partitions of k (k >= 0), in the canonical basis order used
/// throughout: more parts first, then lexicographically ascending.
std::vector<Partition> partitions_of(int k);

/// All partitions of all weights 0..k (the empty partition first).
std::vector<Partition> partitions_up_to(int k);

/// Renders a partition of n as a Chern monomial key, factors ascending:
/// (2,1,1) -> "c1^2*c2".
std::string partition_key(const Partition& p);

/// Inverse of partition_key; throws invalid_input on malformed keys.
Partition parse_partition_key(const std::string& key);

/// Truncated polynomial in n commuting variables with rational coefficients,
/// cut at a fixed total degree. Dense exponent-vector representation; the
/// symmetric-series type below wraps it in orbit-sum form.
class Series {
  public:
    Series(int vars, int max_degree) : vars_(vars), max_degree_(max_degree) {}

    static Series one(int vars, int max_degree);
    /// The single variable x_i.
    static Series variable(int vars, int max_degree, int i);
    /// Univariate series sum_d coeffs[d] * x_i^d, truncated.
    static Series univariate(int vars, int max_degree, int i, const RatVec& coeffs);

    int vars() const { return vars_; }
    int max_degree() const { return max_degree_; }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    void add_term(const std::vector<int>& exp, const Rat& c);

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series operator*(const Series& o) const;
    Series& operator*=(const Rat& c);

    /// The homogeneous part of the given total degree.
    Series degree_part(int d) const;

    friend bool operator==(const Series&, const Series&) = default;

  private:
    int vars_;
    int max_degree_;
    std::map<std::vector<int>, Rat> terms_;
};

/// Symmetric truncated series in n formal roots, stored in orbit-sum form:
/// one entry per descending exponent multiset, holding the coefficient of
/// every monomial in that orbit.
class SymmetricSeries {
  public:
    SymmetricSeries(int vars, int max_degree) : vars_(vars), max_degree_(max_degree) {}

    /// Collapses a dense series; fails with invalid_input if it is not
    /// actually symmetric.
    static SymmetricSeries from_series(const Series& s);

    Series expand() const;

    int vars() const { return vars_; }
    int max_degree() const { return max_degree_; }
    const std::map<std::vector<int>, Rat>& orbits() const { return orbits_; }

    SymmetricSeries operator*(const SymmetricSeries& o) const;
    SymmetricSeries& operator+=(const SymmetricSeries& o);
    SymmetricSeries degree_part(int d) const;

  private:
    int vars_;
    int max_degree_;
    std::map<std::vector<int>, Rat> orbits_;  // keys: descending, no trailing zeros
};

/// Elementary symmetric polynomial e_k of n variables, truncated at degree d.
Series elementary_symmetric(int vars, int max_degree, int k);

/// e_k evaluated at n given series (all with matching vars/max_degree).
Series elementary_symmetric_of(const std::vector<Series>& args, int k);

/// Monomial symmetric polynomial m_mu in n variables.
Series monomial_symmetric(int vars, int max_degree, const Partition& mu);

/// Writes a homogeneous symmetric polynomial of degree d in the elementary
/// symmetric basis by leading-term elimination: result maps lambda |- d to
/// the coefficient of e_lambda = prod e_{lambda_i}.
std::map<Partition, Rat> to_elementary_basis(const Series& sym, int d);

/// Expresses m_omega as a polynomial in e_1..e_m (m = weight of omega) and
/// evaluates it at the given series arguments args[k-1] ~ e_k.
Series milnor_s_polynomial(const Partition& omega, const std::vector<Series>& args);

}  // namespace tcw
