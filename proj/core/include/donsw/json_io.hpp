#pragma once

#include "donsw/invariants.hpp"
#include "donsw/manifold.hpp"

#include <map>
#include <optional>
#include <string>

namespace donsw {

struct ManifoldFile {
    FourManifold x;
    std::map<std::string, Class> names;
};

/// {"rank": n, "gram": [[...], ...]} with integer entries.
std::string lattice_to_json(const Lattice& l);

/// {"lattice": {...}, "sw": [{"class": [...], "value": n}, ...], "names": {...}}.
/// The names block is optional on input and carries the distinguished classes
/// of example manifolds.
std::string manifold_to_json(const FourManifold& x, const std::map<std::string, Class>& names = {});
ManifoldFile manifold_from_json(const std::string& text);

/// Inline integer vectors ("1,0,-2" or "[1,0,-2]") or expressions in named
/// classes ("K", "f1+f2", "2*(f1+f2)", "K - 2*e1").
Class parse_class_spec(const std::string& spec, std::size_t rank, const std::map<std::string, Class>& names);

/// Comma-separated rationals ("1/2,0,-3"), optionally bracketed.
HClass parse_h_vector(const std::string& text, std::size_t rank);

struct ComputeReport {
    InvariantQuery query;
    std::optional<Class> lambda;
    std::optional<Rat> witten;
    std::vector<SeedOutcome> cobordism;
    std::optional<bool> equal;
    std::optional<bool> seed_independent;
    std::optional<bool> scst;
};

/// {"query": {...}, "witten": "p/q", "cobordism": [{"seed": s, "value": "p/q"}],
///  "equal": bool, ...}; rationals cross the boundary as "p/q" strings only.
std::string compute_report_to_json(const ComputeReport& r);

}  // namespace donsw
