#include "gradealg/config.hpp"

#include <algorithm>
#include <sstream>

namespace gradealg {

namespace {

const nlohmann::json& need(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    fail(ErrorKind::Config, std::string("missing config key: ") + key);
  return *it;
}

std::vector<std::int64_t> int_list(const nlohmann::json& j) {
  if (!j.is_array()) fail(ErrorKind::Config, "expected an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(ErrorKind::Config, "expected an integer");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

cplx cplx_from_json(const nlohmann::json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2)
    return cplx(j[0].get<double>(), j[1].get<double>());
  fail(ErrorKind::Config, "complex values are numbers or [re, im] pairs");
}

std::vector<cplx> cplx_list(const nlohmann::json& j) {
  std::vector<cplx> out;
  for (const auto& x : j) out.push_back(cplx_from_json(x));
  return out;
}

}  // namespace

Group group_from_json(const nlohmann::json& j) {
  const std::string kind = need(j, "kind").get<std::string>();
  if (kind == "integers") return Group::integers();
  if (kind == "lattice") return Group::lattice(need(j, "rank").get<int>());
  if (kind == "cyclic") return Group::cyclic(need(j, "q").get<std::int64_t>());
  if (kind == "lattice_mod") return Group::lattice_mod(int_list(need(j, "moduli")));
  if (kind == "heisenberg") return Group::heisenberg();
  if (kind == "table") {
    std::vector<std::vector<int>> table;
    for (const auto& row : need(j, "table"))
      table.push_back(row.get<std::vector<int>>());
    return Group::finite_table(std::move(table));
  }
  fail(ErrorKind::Config, "unknown group kind: " + kind);
}

nlohmann::json group_to_json(const Group& g) {
  switch (g.kind()) {
    case Group::Kind::LatticeMod:
      return {{"kind", "lattice_mod"}, {"moduli", g.moduli()}};
    case Group::Kind::Heisenberg:
      return {{"kind", "heisenberg"}};
    case Group::Kind::FiniteTable:
      return {{"kind", "table"}, {"order", *g.order()}};
  }
  fail(ErrorKind::Config, "bad group kind");
}

GeneratingSet generators_from_json(const Group& g, const nlohmann::json& j) {
  if (!j.contains("generators")) return GeneratingSet::standard(g);
  GeneratingSet v;
  v.elems.push_back(g.id());
  for (const auto& e : j["generators"]) v.elems.push_back(GroupElement(int_list(e)));
  v.symmetric_closure = j.value("symmetric", true);
  v.validate(g);
  return v;
}

Weight weight_from_json(const nlohmann::json& j) {
  const std::string kind = need(j, "kind").get<std::string>();
  if (kind == "constant") return Weight::constant();
  if (kind == "polynomial") return Weight::polynomial(need(j, "s").get<double>());
  if (kind == "exponential") return Weight::exponential(need(j, "a").get<double>());
  if (kind == "table") {
    std::map<GroupElement, double> vals;
    for (const auto& entry : need(j, "values"))
      vals[GroupElement(int_list(entry.at(0)))] = entry.at(1).get<double>();
    return Weight::table(std::move(vals));
  }
  fail(ErrorKind::Config, "unknown weight kind: " + kind);
}

std::shared_ptr<ModelRep> model_from_json(const nlohmann::json& j) {
  const std::string kind = need(j, "kind").get<std::string>();
  if (kind == "lattice_shift")
    return std::make_shared<LatticeShiftModel>(j.value("rank", 1),
                                               j.value("window", std::int64_t{64}));
  if (kind == "bunce_deddens")
    return std::make_shared<BunceDeddensModel>(int_list(need(j, "q")),
                                               j.value("stage", 0),
                                               j.value("window", std::int64_t{128}));
  if (kind == "uhf")
    return std::make_shared<UhfModel>(int_list(need(j, "p")), j.value("stage", 0));
  if (kind == "car") {
    const int d = need(j, "d").get<int>();
    if (!j.contains("degrees")) return CarModel::standard(d);
    Group g = j.contains("group") ? group_from_json(j["group"]) : Group::integers();
    std::vector<GroupElement> degs;
    for (const auto& e : j["degrees"]) degs.push_back(GroupElement(int_list(e)));
    return std::make_shared<CarModel>(d, std::move(g), std::move(degs));
  }
  if (kind == "wiener_hopf")
    return std::make_shared<WienerHopfModel>(j.value("rank", 2),
                                             j.value("window", std::int64_t{12}));
  if (kind == "cyclic")
    return std::make_shared<CyclicModel>(need(j, "q").get<std::int64_t>());
  fail(ErrorKind::Config, "unknown model kind: " + kind);
}

namespace {

std::pair<std::string, std::string> split_token(const std::string& tok) {
  auto pos = tok.find(':');
  if (pos == std::string::npos) return {tok, ""};
  return {tok.substr(0, pos), tok.substr(pos + 1)};
}

std::vector<std::int64_t> parse_int_args(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(std::stoll(part));
  return out;
}

std::vector<cplx> named_coeffs(const nlohmann::json& model_cfg, const std::string& name) {
  if (!model_cfg.contains("coeffs") || !model_cfg["coeffs"].contains(name))
    fail(ErrorKind::Config, "unknown coefficient vector: " + name);
  return cplx_list(model_cfg["coeffs"][name]);
}

GradedElement token_element(const ModelRep& rep, const nlohmann::json& model_cfg,
                            const std::string& tok) {
  const auto [head, arg] = split_token(tok);
  if (head == "1") return rep.unit();

  if (const auto* lat = dynamic_cast<const LatticeShiftModel*>(&rep)) {
    if (head == "d") return lat->delta(GroupElement(parse_int_args(arg)));
  }
  if (const auto* bd = dynamic_cast<const BunceDeddensModel*>(&rep)) {
    if (head == "S" && arg.empty()) return bd->S();
    if (head == "S") return bd->S(named_coeffs(model_cfg, arg));
    if (head == "S*" && arg.empty()) return graded_adjoint(bd->S());
    if (head == "S*") return graded_adjoint(bd->S(named_coeffs(model_cfg, arg)));
    if (head == "M") return bd->M(named_coeffs(model_cfg, arg));
    if (head == "Q") return graded_mul(bd->S(), graded_adjoint(bd->S()));
  }
  if (const auto* wh = dynamic_cast<const WienerHopfModel*>(&rep)) {
    if (head == "W") return wh->W(parse_int_args(arg));
    if (head == "W*") return wh->W_dag(parse_int_args(arg));
  }
  if (const auto* uhf = dynamic_cast<const UhfModel*>(&rep)) {
    if (head == "D") return uhf->diag_element(parse_int_args(arg).at(0));
  }
  if (const auto* car = dynamic_cast<const CarModel*>(&rep)) {
    if (head == "a") return car->element(car->annihilator(static_cast<int>(
                         parse_int_args(arg).at(0))));
    if (head == "a*") return car->element(car->creator(static_cast<int>(
                          parse_int_args(arg).at(0))));
  }
  if (const auto* cyc = dynamic_cast<const CyclicModel*>(&rep)) {
    if (head == "d") return cyc->delta(parse_int_args(arg).at(0));
  }
  fail(ErrorKind::Config, "unknown generator token for this model: " + tok);
}

}  // namespace

GradedElement element_from_json(const ModelRep& rep, const nlohmann::json& model_cfg,
                                const nlohmann::json& elem) {
  GradedElement acc(rep.fibers());
  for (const auto& term : need(elem, "terms")) {
    GradedElement word = rep.unit();
    for (const auto& tok : need(term, "word"))
      word = graded_mul(word, token_element(rep, model_cfg, tok.get<std::string>()));
    acc = graded_add(acc, graded_scale(cplx_from_json(term.value(
                              "coef", nlohmann::json::array({1.0, 0.0}))),
                          word));
  }
  return acc;
}

KGraphSpec kgraph_spec_from_json(const nlohmann::json& j) {
  KGraphSpec spec;
  spec.colors = j.value("colors", 1);
  spec.vertices = j.value("vertices", 1);
  int next_id = 0;
  for (const auto& e : need(j, "edges")) {
    KEdge edge;
    edge.id = e.value("id", next_id);
    next_id = std::max(next_id, edge.id + 1);
    edge.color = e.value("color", 0);
    edge.src = need(e, "src").get<int>();
    edge.rng = need(e, "rng").get<int>();
    edge.name = e.value("name", "");
    spec.edges.push_back(std::move(edge));
  }
  if (j.contains("squares"))
    for (const auto& sq : j["squares"]) {
      auto ids = int_list(sq);
      if (ids.size() != 4) fail(ErrorKind::Config, "squares are 4-tuples of edge ids");
      spec.squares.push_back({static_cast<int>(ids[0]), static_cast<int>(ids[1]),
                              static_cast<int>(ids[2]), static_cast<int>(ids[3])});
    }
  auto cap = int_list(need(j, "cap"));
  spec.degree_cap.assign(cap.begin(), cap.end());
  return spec;
}

TopPartialAction top_action_from_json(const nlohmann::json& j) {
  TopPartialAction act;
  act.points = need(j, "points").get<int>();
  act.boundary.assign(act.points, false);
  if (j.contains("boundary"))
    for (auto p : int_list(j["boundary"])) act.boundary.at(p) = true;
  act.group = group_from_json(need(j, "group"));
  for (const auto& t : need(j, "theta")) {
    PartialBijection b;
    for (const auto& pair : need(t, "pairs"))
      b.fwd[pair.at(0).get<int>()] = pair.at(1).get<int>();
    act.theta[act.group.canon(GroupElement(int_list(need(t, "g"))))] = std::move(b);
  }
  if (j.contains("orbit"))
    for (auto p : int_list(j["orbit"])) act.orbit.push_back(static_cast<int>(p));
  return act;
}

// ---- serialization ----------------------------------------------------------

nlohmann::json block_to_json(const Block& b) {
  if (b.is_matrix()) {
    const Matrix& m = b.matrix();
    nlohmann::json data = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        data.push_back(m(i, j).real());
        data.push_back(m(i, j).imag());
      }
    return {{"type", "matrix"}, {"rows", m.rows()}, {"cols", m.cols()},
            {"data", data}};
  }
  const ShiftBlock& s = b.shift();
  nlohmann::json data = nlohmann::json::array();
  const auto& tc = s.coef();
  std::vector<int> extent(tc.rank());
  std::size_t total = 1;
  for (int i = 0; i < tc.rank(); ++i) {
    extent[i] = tc.transient()[i] + tc.period()[i];
    total *= static_cast<std::size_t>(extent[i]);
  }
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<std::int64_t> x(tc.rank());
    std::size_t rem = idx;
    for (int i = tc.rank() - 1; i >= 0; --i) {
      x[i] = static_cast<std::int64_t>(rem % extent[i]);
      rem /= extent[i];
    }
    cplx v = tc.eval(x);
    data.push_back(v.real());
    data.push_back(v.imag());
  }
  return {{"type", "shift"},
          {"halfspace", s.on_halfspace()},
          {"shift", s.shift()},
          {"transient", tc.transient()},
          {"period", tc.period()},
          {"data", data}};
}

Block block_from_json(const nlohmann::json& j) {
  const std::string type = need(j, "type").get<std::string>();
  auto data = need(j, "data");
  if (type == "matrix") {
    const Eigen::Index rows = need(j, "rows").get<Eigen::Index>();
    const Eigen::Index cols = need(j, "cols").get<Eigen::Index>();
    if (static_cast<Eigen::Index>(data.size()) != 2 * rows * cols)
      fail(ErrorKind::Config, "matrix block data size mismatch");
    Matrix m(rows, cols);
    std::size_t k = 0;
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index jj = 0; jj < cols; ++jj) {
        m(i, jj) = cplx(data[k].get<double>(), data[k + 1].get<double>());
        k += 2;
      }
    return Block(std::move(m));
  }
  if (type == "shift") {
    auto shift = int_list(need(j, "shift"));
    auto trans = need(j, "transient").get<std::vector<int>>();
    auto period = need(j, "period").get<std::vector<int>>();
    std::vector<cplx> vals;
    for (std::size_t k = 0; k + 1 < data.size() + 1; k += 2)
      vals.emplace_back(data[k].get<double>(), data[k + 1].get<double>());
    TailCoef tc(trans, period, std::move(vals));
    const bool halfspace = j.value("halfspace", true);
    if (halfspace) return Block(ShiftBlock::halfspace(shift, std::move(tc)));
    return Block(ShiftBlock::lattice(shift, tc.eval(std::vector<std::int64_t>(
                                                 shift.size(), 0))));
  }
  fail(ErrorKind::Config, "unknown block type: " + type);
}

nlohmann::json element_to_json(const GradedElement& a) {
  nlohmann::json support = nlohmann::json::array();
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& [g, b] : a.components()) {
    support.push_back(g.v);
    blocks.push_back(block_to_json(b));
  }
  return {{"group", group_to_json(a.group())},
          {"support", support},
          {"blocks", blocks}};
}

GradedElement element_from_manifest(std::shared_ptr<const FiberSystem> fs,
                                    const nlohmann::json& j) {
  if (!(group_from_json(need(j, "group")) == fs->group()))
    fail(ErrorKind::Config, "manifest group does not match the fiber system");
  GradedElement e(fs);
  const auto& support = need(j, "support");
  const auto& blocks = need(j, "blocks");
  if (support.size() != blocks.size())
    fail(ErrorKind::Config, "support/blocks size mismatch");
  for (std::size_t i = 0; i < support.size(); ++i)
    e.accumulate(GroupElement(int_list(support[i])), block_from_json(blocks[i]));
  return e;
}

nlohmann::json kernel_to_json(const Kernel& k) {
  nlohmann::json window = nlohmann::json::array();
  for (const auto& g : k.window()) window.push_back(g.v);
  nlohmann::json entries = nlohmann::json::array();
  const int n = static_cast<int>(k.window().size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (const Block* b = k.entry(i, j))
        entries.push_back({{"row", i}, {"col", j}, {"block", block_to_json(*b)}});
  return {{"group", group_to_json(k.group())},
          {"window", window},
          {"entries", entries}};
}

Kernel kernel_from_manifest(std::shared_ptr<const FiberSystem> fs,
                            const nlohmann::json& j) {
  if (!(group_from_json(need(j, "group")) == fs->group()))
    fail(ErrorKind::Config, "manifest group does not match the fiber system");
  std::vector<GroupElement> window;
  for (const auto& g : need(j, "window")) window.push_back(GroupElement(int_list(g)));
  Kernel k(std::move(fs), std::move(window));
  for (const auto& e : need(j, "entries"))
    k.set(need(e, "row").get<int>(), need(e, "col").get<int>(),
          block_from_json(need(e, "block")));
  return k;
}

}  // namespace gradealg
