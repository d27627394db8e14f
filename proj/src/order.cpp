#include "polyideal/order.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "polyideal/error.hpp"

namespace polyideal::alg {

namespace {

std::vector<std::size_t> identity(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
}

template <class T>
std::vector<T> parse_list(std::string_view text, std::string_view what) {
    std::vector<T> out;
    while (!text.empty()) {
        auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        T value{};
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty())
            throw Error(ErrorCode::InvalidArgument, "bad " + std::string(what) + " entry '" + std::string(item) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

MonomialOrder::MonomialOrder(Scheme scheme, std::size_t nvars) : scheme_(scheme), permutation_(identity(nvars)) {
    if (nvars > kMaxVariables) throw Error(ErrorCode::TooManyVariables, std::to_string(nvars) + " variables");
}

MonomialOrder::MonomialOrder(Scheme scheme, std::vector<std::size_t> permutation, std::vector<std::int64_t> weights)
    : scheme_(scheme), permutation_(std::move(permutation)), weights_(std::move(weights)) {
    const std::size_t n = permutation_.size();
    if (n > kMaxVariables) throw Error(ErrorCode::TooManyVariables, std::to_string(n) + " variables");
    std::vector<std::size_t> sorted = permutation_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity(n)) throw Error(ErrorCode::InvalidArgument, "permutation is not a bijection");
    if (!weights_.empty() && weights_.size() != n)
        throw Error(ErrorCode::InvalidArgument, "weight vector length must equal the variable count");
    if (std::any_of(weights_.begin(), weights_.end(), [](std::int64_t w) { return w < 0; }))
        throw Error(ErrorCode::InvalidArgument, "weights must be non-negative");
}

MonomialOrder MonomialOrder::parse(std::string_view spec, std::size_t nvars) {
    auto colon = spec.find(':');
    std::string_view head = spec.substr(0, colon);
    Scheme scheme;
    if (head == "lex") scheme = Scheme::Lex;
    else if (head == "deglex") scheme = Scheme::DegLex;
    else if (head == "degrevlex") scheme = Scheme::DegRevLex;
    else throw Error(ErrorCode::InvalidArgument, "unknown order scheme '" + std::string(head) + "'");

    std::vector<std::size_t> perm = identity(nvars);
    std::vector<std::int64_t> weights;
    std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
    while (!rest.empty()) {
        auto next = rest.find(':');
        std::string_view field = rest.substr(0, next);
        if (field.starts_with("perm=")) perm = parse_list<std::size_t>(field.substr(5), "perm");
        else if (field.starts_with("weights=")) weights = parse_list<std::int64_t>(field.substr(8), "weights");
        else throw Error(ErrorCode::InvalidArgument, "unknown order field '" + std::string(field) + "'");
        if (next == std::string_view::npos) break;
        rest.remove_prefix(next + 1);
    }
    if (perm.size() != nvars)
        throw Error(ErrorCode::InvalidArgument, "permutation must list all " + std::to_string(nvars) + " variables");
    return MonomialOrder(scheme, std::move(perm), std::move(weights));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (!weights_.empty()) {
        std::int64_t wa = 0, wb = 0;
        for (std::size_t v = 0; v < weights_.size(); ++v) {
            wa += weights_[v] * a[v];
            wb += weights_[v] * b[v];
        }
        if (wa != wb) return wa <=> wb;
    }
    if (scheme_ != Scheme::Lex) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    }
    if (scheme_ == Scheme::DegRevLex) {
        for (std::size_t k = permutation_.size(); k-- > 0;) {
            const std::size_t v = permutation_[k];
            if (a[v] != b[v]) return b[v] <=> a[v];
        }
        return std::strong_ordering::equal;
    }
    for (std::size_t v : permutation_)
        if (a[v] != b[v]) return a[v] <=> b[v];
    return std::strong_ordering::equal;
}

std::string MonomialOrder::to_string() const {
    std::string out = scheme_ == Scheme::Lex ? "lex" : scheme_ == Scheme::DegLex ? "deglex" : "degrevlex";
    if (permutation_ != identity(permutation_.size())) {
        out += ":perm=";
        for (std::size_t k = 0; k < permutation_.size(); ++k) out += (k ? "," : "") + std::to_string(permutation_[k]);
    }
    if (!weights_.empty()) {
        out += ":weights=";
        for (std::size_t k = 0; k < weights_.size(); ++k) out += (k ? "," : "") + std::to_string(weights_[k]);
    }
    return out;
}

}  // namespace polyideal::alg
