#include "bnsl/priors.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "bnsl/errors.hpp"

namespace bnsl {

namespace {

double parse_number(std::string_view text, std::string_view what) {
    double value = 0.0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value))
        throw InputError(std::string(what) + " must be a number, got '" + std::string(text) + "'");
    return value;
}

std::string format_number(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

PriorKind parse_prior_kind(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    const bool has_arg = colon != std::string_view::npos;
    const std::string_view arg = has_arg ? text.substr(colon + 1) : std::string_view{};
    if (name == "u" || name == "uniform") {
        if (has_arg) throw InputError("the uniform prior takes no parameter");
        return prior::Uniform{};
    }
    if (name == "mu") {
        const double beta = has_arg ? parse_number(arg, "beta") : 0.5;
        if (!(beta > 0.0 && beta < 1.0)) throw InputError("beta must lie strictly inside (0, 1)");
        return prior::MarginalUniform{beta};
    }
    if (name == "mu-sparse") {
        const double c = has_arg ? parse_number(arg, "c") : 1.0;
        if (!(c > 0.0)) throw InputError("c must be positive");
        return prior::MarginalUniformSparse{c};
    }
    throw InputError("unknown prior '" + std::string(text) + "'");
}

std::string to_string(const PriorKind& kind) {
    if (std::holds_alternative<prior::Uniform>(kind)) return "u";
    if (const auto* p = std::get_if<prior::MarginalUniform>(&kind)) return "mu:" + format_number(p->beta);
    return "mu-sparse:" + format_number(std::get<prior::MarginalUniformSparse>(kind).c);
}

std::optional<double> resolve_beta(const PriorKind& kind, std::size_t n_nodes) {
    double beta = 0.0;
    if (std::holds_alternative<prior::Uniform>(kind)) return std::nullopt;
    if (const auto* p = std::get_if<prior::MarginalUniform>(&kind)) {
        beta = p->beta;
    } else {
        if (n_nodes < 2) throw OutOfRange("the sparse marginal uniform prior needs at least two nodes");
        beta = 2.0 * std::get<prior::MarginalUniformSparse>(kind).c / static_cast<double>(n_nodes - 1);
    }
    if (!(beta > 0.0 && beta < 1.0))
        throw OutOfRange("resolved beta " + format_number(beta) + " is outside (0, 1)");
    return beta;
}

double log_prior_move_ratio(const PriorKind& kind, const ArcMove& move, std::size_t n_nodes) {
    const auto beta = resolve_beta(kind, n_nodes);
    if (!beta) return 0.0;
    const double add = std::log(*beta / 2.0) - std::log1p(-*beta);
    switch (move.kind) {
        case MoveKind::Add: return add;
        case MoveKind::Delete: return -add;
        case MoveKind::Reverse: return 0.0;
    }
    return 0.0;
}

double expected_arc_count(const PriorKind& kind, std::size_t n_nodes) {
    if (std::holds_alternative<prior::Uniform>(kind))
        throw NotApplicable("expected arc count is not defined for the uniform prior");
    if (n_nodes < 2) throw OutOfRange("expected arc count needs at least two nodes");
    const double n = static_cast<double>(n_nodes);
    if (const auto* p = std::get_if<prior::MarginalUniformSparse>(&kind)) {
        resolve_beta(kind, n_nodes);
        return p->c * n;
    }
    return n * (n - 1.0) * *resolve_beta(kind, n_nodes) / 2.0;
}

double log_prior(const PriorKind& kind, const Dag& dag) {
    if (std::holds_alternative<prior::Uniform>(kind) || dag.node_count() < 2) return 0.0;
    const double beta = *resolve_beta(kind, dag.node_count());
    const double n = static_cast<double>(dag.node_count());
    const double arcs = static_cast<double>(dag.arc_count());
    const double pairs = n * (n - 1.0) / 2.0;
    return arcs * std::log(beta / 2.0) + (pairs - arcs) * std::log1p(-beta);
}

}  // namespace bnsl
