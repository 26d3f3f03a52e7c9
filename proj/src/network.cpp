#include "crvr/network.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace crvr {

WeightedNetwork WeightedNetwork::from_matrix(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    WeightedNetwork net(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("weight matrix is not square");
        if (rows[i][i] != 0.0) throw std::invalid_argument("weight matrix has a nonzero diagonal");
        for (std::size_t j = 0; j < n; ++j) {
            if (rows[i][j] < 0.0) throw std::invalid_argument("negative weight");
            if (rows[i][j] != rows[j][i]) throw std::invalid_argument("weight matrix is asymmetric");
            net.w_[i * n + j] = rows[i][j];
        }
    }
    return net;
}

void WeightedNetwork::set_weight(std::size_t i, std::size_t j, double w) {
    check_index(i);
    check_index(j);
    if (i == j) throw std::invalid_argument("self-loops are not allowed");
    if (w < 0.0 || !std::isfinite(w)) throw std::invalid_argument("weight must be finite and >= 0");
    w_[i * n_ + j] = w;
    w_[j * n_ + i] = w;
}

double WeightedNetwork::total_weight() const {
    double total = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) total += w_[i * n_ + j];
    return total;
}

double strength(const WeightedNetwork& net, std::size_t i) {
    double s = 0.0;
    for (std::size_t j = 0; j < net.size(); ++j)
        if (net.has_edge(i, j)) s += net.weight(i, j);
    return s;
}

std::size_t degree(const WeightedNetwork& net, std::size_t i) {
    std::size_t k = 0;
    for (std::size_t j = 0; j < net.size(); ++j)
        if (net.has_edge(i, j)) ++k;
    return k;
}

double weighted_clustering(const WeightedNetwork& net, std::size_t i) {
    const std::size_t n = net.size();
    const std::size_t k = degree(net, i);
    if (k <= 1) return 0.0;  // degenerate denominator
    const double s = strength(net, i);
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (!net.has_edge(i, j)) continue;
        for (std::size_t h = 0; h < n; ++h) {
            if (!net.has_edge(i, h) || !net.has_edge(j, h)) continue;
            acc += 0.5 * (net.weight(i, j) + net.weight(j, h));
        }
    }
    return acc / (s * static_cast<double>(k - 1));
}

std::string format_real(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

namespace {

double parse_real(std::string_view tok, std::size_t line) {
    double v = 0.0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw ParseError("cannot parse real '" + std::string(tok) + "'", line);
    return v;
}

std::size_t parse_index(std::string_view tok, std::size_t line) {
    std::size_t v = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw ParseError("cannot parse vertex index '" + std::string(tok) + "'", line);
    return v;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

bool is_comment_or_blank(const std::vector<std::string>& toks) {
    return toks.empty() || toks[0][0] == '#';
}

WeightedNetwork read_edge_list(std::istream& in) {
    struct Entry {
        std::size_t i, j;
        double w;
        std::size_t line;
    };
    std::vector<Entry> entries;
    std::size_t max_index = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = split_ws(line);
        if (is_comment_or_blank(toks)) continue;
        if (toks.size() != 3) throw ParseError("expected 'i j w'", line_no);
        Entry e;
        e.i = parse_index(toks[0], line_no);
        e.j = parse_index(toks[1], line_no);
        e.w = parse_real(toks[2], line_no);
        e.line = line_no;
        if (e.i == e.j)
            throw std::invalid_argument("self-loop entry at line " + std::to_string(line_no));
        if (e.w < 0.0)
            throw std::invalid_argument("negative weight at line " + std::to_string(line_no));
        max_index = std::max({max_index, e.i, e.j});
        entries.push_back(e);
    }
    if (entries.empty()) throw std::invalid_argument("edge list is empty");
    WeightedNetwork net(max_index + 1);
    std::vector<bool> seen((max_index + 1) * (max_index + 1), false);
    for (const auto& e : entries) {
        std::size_t a = std::min(e.i, e.j), b = std::max(e.i, e.j);
        if (seen[a * (max_index + 1) + b])
            throw std::invalid_argument("duplicate pair at line " + std::to_string(e.line));
        seen[a * (max_index + 1) + b] = true;
        net.set_weight(e.i, e.j, e.w);
    }
    return net;
}

WeightedNetwork read_dense(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> toks;
    do {
        if (!std::getline(in, line)) throw ParseError("missing vertex count", line_no + 1);
        ++line_no;
        toks = split_ws(line);
    } while (is_comment_or_blank(toks));
    if (toks.size() != 1) throw ParseError("expected vertex count alone on first line", line_no);
    const std::size_t n = parse_index(toks[0], line_no);
    if (n == 0) throw std::invalid_argument("vertex count must be >= 1");

    std::vector<std::vector<double>> rows;
    rows.reserve(n);
    while (rows.size() < n) {
        if (!std::getline(in, line))
            throw ParseError("expected " + std::to_string(n) + " matrix rows", line_no + 1);
        ++line_no;
        toks = split_ws(line);
        if (is_comment_or_blank(toks)) continue;
        if (toks.size() != n) throw ParseError("expected " + std::to_string(n) + " entries", line_no);
        std::vector<double> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = parse_real(toks[j], line_no);
        rows.push_back(std::move(row));
    }
    return WeightedNetwork::from_matrix(rows);
}

}  // namespace

WeightedNetwork read_network(std::istream& in, NetworkFormat format) {
    return format == NetworkFormat::edge_list ? read_edge_list(in) : read_dense(in);
}

WeightedNetwork load_network(const std::filesystem::path& path, NetworkFormat format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_network(in, format);
}

void write_network(const WeightedNetwork& net, std::ostream& out, NetworkFormat format) {
    const std::size_t n = net.size();
    if (format == NetworkFormat::edge_list) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (net.has_edge(i, j))
                    out << i << ' ' << j << ' ' << format_real(net.weight(i, j)) << '\n';
    } else {
        out << n << '\n';
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j) out << ' ';
                out << format_real(net.weight(i, j));
            }
            out << '\n';
        }
    }
}

void save_network(const WeightedNetwork& net, const std::filesystem::path& path,
                  NetworkFormat format) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_network(net, out, format);
}

}  // namespace crvr
