#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "deckforge/graph.hpp"

namespace deckforge {

struct EnumerationLimits {
    // Extension attempts allowed while building one stratum.
    std::uint64_t max_states = 10'000'000;
};

/// The finite set of isomorphism classes with exactly v vertices and n
/// edges, in the lexicographic order of their serializations.
struct StratumCatalog {
    int v = 0;
    int n = 0;
    std::vector<CanonicalGraph> classes;
    std::unordered_map<std::string, std::size_t> index;

    std::size_t size() const { return classes.size(); }
    bool contains(const CanonicalGraph& g) const {
        return index.count(g.serial()) > 0;
    }
    std::size_t position_of(const CanonicalGraph& g) const;
};

// Optional persistence hook; the CLI plugs a JSON file cache in here.
class CatalogBackend {
public:
    virtual ~CatalogBackend() = default;
    virtual std::optional<std::vector<std::string>> load(int v, int n) = 0;
    virtual void store(int v, int n, const std::vector<std::string>& classes) = 0;
};

/// Memoizing catalog provider. Strata are generated level by level: every
/// (n+1)-edge class arises from some n-edge class by adding one edge, so
/// extending every class of level n by every absent edge and deduplicating
/// canonical forms yields level n+1 completely.
class CatalogStore {
public:
    CatalogStore() = default;
    explicit CatalogStore(EnumerationLimits limits) : limits_(limits) {}

    void set_limits(EnumerationLimits limits) { limits_ = limits; }
    const EnumerationLimits& limits() const { return limits_; }
    void attach_backend(std::shared_ptr<CatalogBackend> backend) {
        backend_ = std::move(backend);
    }

    const StratumCatalog& get(int v, int n);

private:
    StratumCatalog compute(int v, int n);

    EnumerationLimits limits_;
    std::shared_ptr<CatalogBackend> backend_;
    std::map<std::pair<int, int>, StratumCatalog> memo_;
};

// One-shot enumeration of a stratum.
StratumCatalog enumerate_stratum(int v, int n, const EnumerationLimits& limits = {});

} // namespace deckforge
