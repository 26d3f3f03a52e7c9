#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crvr {

// File-level failure with the offending line attached.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Undirected weighted network held as a dense symmetric matrix with zero
/// diagonal. Weight 0 encodes "no edge"; optional planted block labels
/// travel with the network for benchmarking against generators.
class WeightedNetwork {
public:
    explicit WeightedNetwork(std::size_t n) : n_(n), w_(n * n, 0.0) {
        if (n == 0) throw std::invalid_argument("network needs at least one vertex");
    }

    // Validates symmetry, zero diagonal and non-negativity.
    static WeightedNetwork from_matrix(const std::vector<std::vector<double>>& rows);

    std::size_t size() const { return n_; }

    double weight(std::size_t i, std::size_t j) const {
        check_index(i);
        check_index(j);
        return w_[i * n_ + j];
    }

    // Sets both orientations; rejects self-loops and negative weights.
    void set_weight(std::size_t i, std::size_t j, double w);

    bool has_edge(std::size_t i, std::size_t j) const { return weight(i, j) > 0.0; }

    double total_weight() const;  // sum over unordered pairs

    std::optional<std::vector<int>> planted_labels;

private:
    void check_index(std::size_t i) const {
        if (i >= n_) throw std::invalid_argument("vertex index out of range");
    }

    std::size_t n_;
    std::vector<double> w_;
};

/// s_i: sum of weights of positive-weight edges at i.
double strength(const WeightedNetwork& net, std::size_t i);

/// k_i: number of positive-weight neighbours of i.
std::size_t degree(const WeightedNetwork& net, std::size_t i);

/// Weighted clustering coefficient of vertex i,
///   C_i = 1/(s_i (k_i - 1)) * sum_{j,h} (w_ij + w_jh)/2 * a_ij a_ih a_jh,
/// over ordered pairs (j, h). Returns 0 when k_i <= 1.
double weighted_clustering(const WeightedNetwork& net, std::size_t i);

enum class NetworkFormat { edge_list, dense };

// Edge list: "i j w" per line, 0-based, '#' comments, missing pairs are 0.
// Dense: first line n, then n rows of n reals.
WeightedNetwork load_network(const std::filesystem::path& path, NetworkFormat format);
WeightedNetwork read_network(std::istream& in, NetworkFormat format);
void save_network(const WeightedNetwork& net, const std::filesystem::path& path,
                  NetworkFormat format);
void write_network(const WeightedNetwork& net, std::ostream& out, NetworkFormat format);

/// Shortest decimal string that round-trips the double exactly.
std::string format_real(double x);

}  // namespace crvr
