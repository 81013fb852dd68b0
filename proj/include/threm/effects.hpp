#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "threm/types.hpp"

namespace threm {

/// Geometrically weighted subset repetition parameters. kappa weights the
/// source-side overlap, lambda the target side; a negative value drops that
/// side entirely (collapsed unidimensional form). Both negative is forbidden.
struct GwsrConfig {
    double kappa = 5.0;
    double lambda = 5.0;
    NodeType source_role = NodeType::Author;
    NodeType target_role = NodeType::Reference;

    bool source_active() const { return kappa >= 0.0; }
    bool target_active() const { return lambda >= 0.0; }
    void validate() const {
        if (kappa < 0.0 && lambda < 0.0)
            throw ConfigError("gwsr: kappa and lambda cannot both be negative");
        if (source_role == target_role) throw ConfigError("gwsr: roles must be distinct");
    }
};

/// Two-path closure specification: endpoint types (outer) and intermediary
/// type (inner). distinct_events requires the two legs to be witnessed by
/// two different past events (off by default).
struct ClosureSpec {
    NodeType outer_left = NodeType::Author;
    NodeType inner = NodeType::Author;
    NodeType outer_right = NodeType::Author;
    bool distinct_events = false;
};

enum class EffectKind { Gwsr, Closure };

struct EffectDef {
    std::string name;
    EffectKind kind;
    GwsrConfig gwsr;      // meaningful when kind == Gwsr
    ClosureSpec closure;  // meaningful when kind == Closure

    /// True when the effect's definition involves the node type (used by the
    /// drop-one-node-type sub-models; equivalent to the name mentioning
    /// aut/ref/key).
    bool depends_on(NodeType type) const;
};

/// The ordered list of the 24 effect statistics. The order is fixed: it is
/// the design-matrix column order.
struct EffectCatalog {
    std::vector<EffectDef> effects;

    std::size_t size() const { return effects.size(); }
    const EffectDef& operator[](std::size_t i) const { return effects[i]; }

    /// Index of an effect by canonical name; throws on unknown names.
    std::size_t index_of(const std::string& name) const;
    bool contains(const std::string& name) const;

    std::vector<std::string> names() const;

    /// The full 24-effect catalog (6 GWSR + 18 closure) with the given decay
    /// defaults applied to every active GWSR side.
    static EffectCatalog standard(double kappa = 5.0, double lambda = 5.0);

    /// Subset view preserving catalog order; names must exist.
    EffectCatalog subset(const std::vector<std::string>& keep) const;

    /// Catalog config file: one effect per line, "name[,kappa,lambda]".
    /// Lines starting with '#' and blank lines are skipped. kappa/lambda
    /// overrides are only valid for GWSR effects.
    static EffectCatalog from_config(std::istream& in, double kappa = 5.0, double lambda = 5.0);
};

}  // namespace threm
