#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <variant>
#include <vector>

#include "qpcam/frqi.hpp"
#include "qpcam/qsim.hpp"

namespace qpcam::actions {

// RX(angle) on the color qubit, controlled on one positional qubit.
struct CrxGate {
    int positional = 0;    // p_k index, not the raw qubit index
    int control_value = 1;
    double angle = M_PI / 2.0;
};

// Measure with this many total shots instead of the default.
struct ShotNoise {
    std::uint64_t shots = 0;
};

// Re-encode with ceil(fraction * pixels) uniformly random pixels set to theta_r.
struct PixelNoise {
    double fraction = 0.0;
    double theta_r = M_PI / 4.0;
};

using BaseAction = std::variant<CrxGate, ShotNoise, PixelNoise>;

struct ActionCatalog {
    std::vector<BaseAction> actions;
    int max_select = 4;

    std::size_t size() const { return actions.size(); }
};

// Sorted, strictly increasing catalog indices; non-empty, size <= max_select.
struct ActionSet {
    std::vector<int> indices;
};

struct ActionPlan {
    std::vector<qsim::Gate> gate_suffix;
    std::optional<std::uint64_t> shots_override;
    struct Redaction {
        double fraction = 0.0;
        double theta_r = 0.0;
        std::uint64_t seed = 0;
    };
    std::optional<Redaction> pixel_redaction;
};

// 28 actions for the 16x16 layout: CRX(pi/2) on p0..p7 at control value 1,
// the same at control value 0, six shot levels, six redaction fractions.
ActionCatalog default_catalog(const frqi::FrqiLayout& layout);

// All non-empty subsets of size <= max_select, ordered by size and then
// lexicographically within each size. Index 0 is {0}.
class ActionSpace {
public:
    explicit ActionSpace(ActionCatalog catalog);

    std::size_t size() const { return total_; }
    const ActionCatalog& catalog() const { return catalog_; }

    ActionSet decode(std::size_t index) const;
    std::size_t encode(const ActionSet& set) const;

private:
    ActionCatalog catalog_;
    std::size_t total_ = 0;
    std::vector<std::size_t> size_offsets_;            // offset of the first set of size k
    std::vector<std::vector<std::size_t>> binomial_;   // C(i, j) table
};

std::vector<ActionSet> enumerate_action_sets(const ActionCatalog& catalog);

// Gates appended in catalog order; minimum shots wins among ShotNoise entries;
// largest fraction wins among PixelNoise entries. Deterministic per (set, seed).
ActionPlan compile(const ActionSet& set, const ActionCatalog& catalog,
                   const frqi::FrqiLayout& layout, std::uint64_t seed);

// Applies a plan's redaction stage to an angle image (seeded pixel choice).
frqi::AngleImage apply_redaction(const frqi::AngleImage& angles,
                                 const ActionPlan::Redaction& redaction);

void validate_action_set(const ActionSet& set, const ActionCatalog& catalog);

// JSON round-trip of the ordered action list, so alternate catalogs can be tested.
void write_catalog_json(const ActionCatalog& catalog, const std::filesystem::path& path);
ActionCatalog read_catalog_json(const std::filesystem::path& path);
std::string catalog_to_json(const ActionCatalog& catalog);
ActionCatalog catalog_from_json(const std::string& text);

}  // namespace qpcam::actions
