#pragma once

#include "gradealg/dual_action.hpp"
#include "gradealg/kernel.hpp"
#include "gradealg/kgraph.hpp"
#include "gradealg/models.hpp"
#include "gradealg/numerics.hpp"
#include "gradealg/partial_action.hpp"
#include "gradealg/report.hpp"

namespace gradealg {

// ---- declarative configs ----------------------------------------------------

// {"kind": "integers" | "lattice" | "cyclic" | "lattice_mod" | "heisenberg"
//  | "table", ...parameters}
Group group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const Group& g);

// optional "generators": [[..], ..] with "symmetric": bool; default standard
GeneratingSet generators_from_json(const Group& g, const nlohmann::json& j);

// {"kind": "constant" | "polynomial" | "exponential" | "table", ...}
Weight weight_from_json(const nlohmann::json& j);

// {"kind": "lattice_shift" | "bunce_deddens" | "uhf" | "car" | "wiener_hopf"
//  | "cyclic", ...parameters}
std::shared_ptr<ModelRep> model_from_json(const nlohmann::json& j);

// Element recipe: {"terms": [{"coef": [re, im], "word": ["S:a", ...]}]},
// with named coefficient vectors under config["coeffs"]. Token grammar
// depends on the model kind (see README).
GradedElement element_from_json(const ModelRep& rep, const nlohmann::json& model_cfg,
                                const nlohmann::json& elem);

KGraphSpec kgraph_spec_from_json(const nlohmann::json& j);
TopPartialAction top_action_from_json(const nlohmann::json& j);

// ---- serialization ----------------------------------------------------------

nlohmann::json block_to_json(const Block& b);
Block block_from_json(const nlohmann::json& j);
// {"group": .., "support": [degree tuples], "blocks": [block objects]}
nlohmann::json element_to_json(const GradedElement& a);
GradedElement element_from_manifest(std::shared_ptr<const FiberSystem> fs,
                                    const nlohmann::json& j);
// {"group": .., "window": [..], "entries": [{"row", "col", "block"}]}
nlohmann::json kernel_to_json(const Kernel& k);
Kernel kernel_from_manifest(std::shared_ptr<const FiberSystem> fs,
                            const nlohmann::json& j);

// ---- experiment runner --------------------------------------------------------

struct RunOptions {
  std::uint64_t seed = 0;
  std::vector<std::int64_t> windows;  // overrides config "windows"
  std::size_t cap = 200000;           // resource cap (GRADEALG_CAP)
};

// op in {verify, invert, project, radius, fredholm, kgraph, weights}
Report run_experiment(const std::string& op, const nlohmann::json& config,
                      const RunOptions& opts);

}  // namespace gradealg
