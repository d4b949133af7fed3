#include "qpcam/actions.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qpcam/rng.hpp"

namespace qpcam::actions {

using nlohmann::json;

ActionCatalog default_catalog(const frqi::FrqiLayout& layout) {
    if (layout.n != 4)
        throw std::invalid_argument("default catalog is defined for the 16x16 layout (n=4)");
    ActionCatalog catalog;
    catalog.max_select = 4;
    for (int cv : {1, 0})
        for (int k = 0; k < layout.num_positional(); ++k)
            catalog.actions.push_back(CrxGate{k, cv, M_PI / 2.0});
    for (std::uint64_t shots : {4096ULL, 2048ULL, 1024ULL, 512ULL, 256ULL, 128ULL})
        catalog.actions.push_back(ShotNoise{shots});
    for (double fraction : {0.05, 0.1, 0.2, 0.3, 0.4, 0.5})
        catalog.actions.push_back(PixelNoise{fraction, M_PI / 4.0});
    return catalog;
}

void validate_action_set(const ActionSet& set, const ActionCatalog& catalog) {
    if (set.indices.empty()) throw std::invalid_argument("action set must be non-empty");
    if (set.indices.size() > static_cast<std::size_t>(catalog.max_select))
        throw std::invalid_argument("action set exceeds max_select");
    int prev = -1;
    for (int idx : set.indices) {
        if (idx <= prev) throw std::invalid_argument("action indices must be strictly increasing");
        if (idx < 0 || static_cast<std::size_t>(idx) >= catalog.size())
            throw std::invalid_argument("action index out of catalog range");
        prev = idx;
    }
}

ActionSpace::ActionSpace(ActionCatalog catalog) : catalog_(std::move(catalog)) {
    if (catalog_.actions.empty()) throw std::invalid_argument("catalog must be non-empty");
    if (catalog_.max_select < 1) throw std::invalid_argument("max_select must be >= 1");
    const std::size_t n = catalog_.size();
    const std::size_t kmax = std::min<std::size_t>(catalog_.max_select, n);

    binomial_.assign(n + 1, std::vector<std::size_t>(kmax + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        binomial_[i][0] = 1;
        for (std::size_t j = 1; j <= std::min(i, kmax); ++j)
            binomial_[i][j] = (j == i) ? 1 : binomial_[i - 1][j - 1] + binomial_[i - 1][j];
    }

    size_offsets_.assign(kmax + 2, 0);
    std::size_t acc = 0;
    for (std::size_t k = 1; k <= kmax; ++k) {
        size_offsets_[k] = acc;
        acc += binomial_[n][k];
    }
    size_offsets_[kmax + 1] = acc;
    total_ = acc;
}

ActionSet ActionSpace::decode(std::size_t index) const {
    if (index >= total_) throw std::invalid_argument("action index out of range");
    const std::size_t n = catalog_.size();
    const std::size_t kmax = size_offsets_.size() - 2;
    std::size_t k = 1;
    while (k < kmax && index >= size_offsets_[k + 1]) ++k;
    std::size_t rank = index - size_offsets_[k];

    ActionSet set;
    set.indices.reserve(k);
    std::size_t next = 0;
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t v = next; v < n; ++v) {
            const std::size_t remaining = k - 1 - j;
            const std::size_t with_v = binomial_[n - 1 - v][remaining];
            if (rank < with_v) {
                set.indices.push_back(static_cast<int>(v));
                next = v + 1;
                break;
            }
            rank -= with_v;
        }
    }
    return set;
}

std::size_t ActionSpace::encode(const ActionSet& set) const {
    validate_action_set(set, catalog_);
    const std::size_t n = catalog_.size();
    const std::size_t k = set.indices.size();
    std::size_t rank = 0;
    std::size_t prev = 0;
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t v = prev; v < static_cast<std::size_t>(set.indices[j]); ++v)
            rank += binomial_[n - 1 - v][k - 1 - j];
        prev = static_cast<std::size_t>(set.indices[j]) + 1;
    }
    return size_offsets_[k] + rank;
}

std::vector<ActionSet> enumerate_action_sets(const ActionCatalog& catalog) {
    ActionSpace space(catalog);
    std::vector<ActionSet> sets;
    sets.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) sets.push_back(space.decode(i));
    return sets;
}

ActionPlan compile(const ActionSet& set, const ActionCatalog& catalog,
                   const frqi::FrqiLayout& layout, std::uint64_t seed) {
    validate_action_set(set, catalog);
    ActionPlan plan;
    for (int idx : set.indices) {
        const BaseAction& action = catalog.actions[static_cast<std::size_t>(idx)];
        if (const auto* crx = std::get_if<CrxGate>(&action)) {
            if (crx->positional < 0 || crx->positional >= layout.num_positional())
                throw std::invalid_argument("CRX positional index outside the layout");
            plan.gate_suffix.push_back(qsim::Gate::rx(
                crx->angle, layout.color_qubit(),
                {{layout.positional_qubit(crx->positional), crx->control_value}}));
        } else if (const auto* shot = std::get_if<ShotNoise>(&action)) {
            if (!plan.shots_override || shot->shots < *plan.shots_override)
                plan.shots_override = shot->shots;
        } else if (const auto* pix = std::get_if<PixelNoise>(&action)) {
            if (!plan.pixel_redaction || pix->fraction > plan.pixel_redaction->fraction) {
                plan.pixel_redaction = ActionPlan::Redaction{
                    pix->fraction, pix->theta_r, derive_seed(seed, "redaction")};
            }
        }
    }
    return plan;
}

frqi::AngleImage apply_redaction(const frqi::AngleImage& angles,
                                 const ActionPlan::Redaction& redaction) {
    const std::size_t pixels = angles.pixel_count();
    const auto count = static_cast<std::size_t>(
        std::ceil(redaction.fraction * static_cast<double>(pixels)));
    if (count == 0) return angles;
    std::vector<std::size_t> order(pixels);
    std::iota(order.begin(), order.end(), 0);
    CounterRng rng(redaction.seed);
    std::set<std::size_t> chosen;
    for (std::size_t i = 0; i < std::min(count, pixels); ++i) {
        const std::size_t j = i + rng.next_below(pixels - i);
        std::swap(order[i], order[j]);
        chosen.insert(order[i]);
    }
    return frqi::redact_pixels(angles, chosen, redaction.theta_r);
}

namespace {

json action_to_json(const BaseAction& action) {
    if (const auto* crx = std::get_if<CrxGate>(&action))
        return json{{"kind", "crx"},
                    {"positional", crx->positional},
                    {"control_value", crx->control_value},
                    {"angle", crx->angle}};
    if (const auto* shot = std::get_if<ShotNoise>(&action))
        return json{{"kind", "shot_noise"}, {"shots", shot->shots}};
    const auto& pix = std::get<PixelNoise>(action);
    return json{{"kind", "pixel_noise"}, {"fraction", pix.fraction}, {"theta_r", pix.theta_r}};
}

BaseAction action_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "crx")
        return CrxGate{j.at("positional").get<int>(), j.at("control_value").get<int>(),
                       j.at("angle").get<double>()};
    if (kind == "shot_noise") return ShotNoise{j.at("shots").get<std::uint64_t>()};
    if (kind == "pixel_noise")
        return PixelNoise{j.at("fraction").get<double>(), j.at("theta_r").get<double>()};
    throw std::invalid_argument("unknown action kind: " + kind);
}

}  // namespace

std::string catalog_to_json(const ActionCatalog& catalog) {
    json j;
    j["max_select"] = catalog.max_select;
    j["actions"] = json::array();
    for (const BaseAction& a : catalog.actions) j["actions"].push_back(action_to_json(a));
    return j.dump(2);
}

ActionCatalog catalog_from_json(const std::string& text) {
    const json j = json::parse(text);
    ActionCatalog catalog;
    catalog.max_select = j.at("max_select").get<int>();
    for (const json& a : j.at("actions")) catalog.actions.push_back(action_from_json(a));
    if (catalog.actions.empty()) throw std::invalid_argument("catalog must be non-empty");
    return catalog;
}

void write_catalog_json(const ActionCatalog& catalog, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << catalog_to_json(catalog) << "\n";
}

ActionCatalog read_catalog_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return catalog_from_json(ss.str());
}

}  // namespace qpcam::actions
