#include <atomic>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "kumlift/cli.hpp"

namespace kumlift::cli {

namespace {

using json = nlohmann::ordered_json;

json to_json(const Rational& r) { return to_string(r); }

json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_json(const RatMatrix& v) {
  json out = json::array();
  for (const auto& x : v.entries()) out.push_back(to_string(x));
  return out;
}

json to_json(const Witness& w) {
  json out;
  out["description"] = w.description;
  out["vectors"] = json::array();
  for (const auto& v : w.vectors) out["vectors"].push_back(vector_json(v));
  out["values"] = json::array();
  for (const auto& x : w.values) out["values"].push_back(to_json(x));
  return out;
}

struct TaskResult {
  std::string verdict;
  json witness;
  json derived = json::object();
};

TaskResult from_check(const Check& c) {
  return {c.holds ? "pass" : "fail", c.witness ? to_json(*c.witness) : json(nullptr), json::object()};
}

BlockIso as_block_iso(const Problem& p, const std::string& label) {
  if (auto it = p.symplectic.find(label); it != p.symplectic.end()) return orlov_matrix(it->second);
  return p.mukai.at(label);
}

TaskResult run_check_hodge(const Problem& p, const Task& t) {
  const BlockIso f = as_block_iso(p, t.map_label);
  const Check iso = is_isometry(f), hodge = is_hodge(f), special = is_special(f);
  TaskResult r;
  r.verdict = iso && hodge && special ? "pass" : "fail";
  r.witness = !iso ? to_json(*iso.witness) : !hodge ? to_json(*hodge.witness) : !special ? to_json(*special.witness) : json(nullptr);
  r.derived["isometry"] = iso.holds;
  r.derived["hodge"] = hodge.holds;
  r.derived["special"] = special.holds;
  r.derived["determinant"] = to_json(f.F.determinant());
  return r;
}

TaskResult run_lift(const Problem& p, const Task& t) {
  const IsogenyContext ctx = make_context(p.homs.at(t.hom_label));
  const IsogenyContext ctx2 = make_context(p.homs.at(t.hom2_label));
  if (t.on_cover) {
    const Check c = in_G_SO(ctx, ctx2, p.mukai.at(t.map_label));
    TaskResult r = from_check(c);
    if (t.op == Op::restrict) {
      if (!c.holds) {
        r.verdict = "none";
      } else {
        r.derived["restricted"] = to_json(restrict_res(ctx, ctx2, p.mukai.at(t.map_label)).F);
      }
    }
    return r;
  }
  const LiftResult lift = lift_criterion(ctx, ctx2, as_block_iso(p, t.map_label));
  TaskResult r;
  r.verdict = lift ? "pass" : "none";
  r.witness = lift.witness ? to_json(*lift.witness) : json(nullptr);
  if (lift) r.derived["gamma"] = to_json(lift.gamma->F);
  return r;
}

TaskResult run_kummer_split(const Problem& p, const Task& t) {
  const SymplecticMap& g = p.symplectic.at(t.map_label);
  const KummerContext k = make_kummer_context(g.source, g.target, static_cast<int>(t.n));
  const Check criterion = kummer_criterion(g, k.n);
  TaskResult r;
  r.derived["criterion"] = criterion.holds;
  const LiftResult transported = transport_and_restrict(k, g);
  if (!transported) {
    r.verdict = "none";
    r.witness = to_json(*transported.witness);
    return r;
  }
  const auto parts = split(k, *transported.gamma);
  if (!parts) {
    r.verdict = "none";
    r.witness = to_json(Witness{"off-diagonal block is nonzero", {}, {}});
    return r;
  }
  r.verdict = "pass";
  r.witness = nullptr;
  r.derived["eta1"] = to_json(parts->eta1.F);
  r.derived["eta2"] = to_json(parts->eta2.F);
  r.derived["eta2_symplectic"] = to_json(eta2_symplectic(g, k.n).g);
  r.derived["eta2_equals_orlov_of_g"] = parts->eta2.F == orlov_matrix(g).F;
  return r;
}

TaskResult run_pd_square(const Problem& p, const Task& t) {
  const PdSquareResult res = check_pd_square(p.homs.at(t.hom_label));
  TaskResult r;
  r.verdict = res.holds ? "pass" : "fail";
  if (res.witness) {
    const auto& w = *res.witness;
    r.witness = {{"description", "graded blocks differ"},
                 {"degree", w.degree},
                 {"row", w.row},
                 {"col", w.col},
                 {"values", {to_json(w.lhs), to_json(w.rhs)}}};
  } else {
    r.witness = nullptr;
  }
  r.derived["degree"] = res.degree.get_str();
  return r;
}

TaskResult run_task(const Problem& p, const Task& t) {
  switch (t.op) {
    case Op::check_sp: {
      const SymplecticMap& g = p.symplectic.at(t.map_label);
      TaskResult r = from_check(is_symplectic_hat(g));
      if (r.verdict == "pass") r.derived["orlov"] = to_json(orlov_matrix(g).F);
      return r;
    }
    case Op::check_hodge:
      return run_check_hodge(p, t);
    case Op::check_lift:
    case Op::restrict:
      return run_lift(p, t);
    case Op::kummer_split:
      return run_kummer_split(p, t);
    case Op::pd_square:
      return run_pd_square(p, t);
  }
  return {"none", nullptr, json::object()};
}

}  // namespace

RunOutcome run_text(const std::string& text, const RunOptions& options) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  Problem problem;
  try {
    problem = parse_problem(text);
  } catch (const ValidationError& e) {
    return {2, "", std::string("error: ") + e.what() + "\n"};
  }

  const std::size_t count = problem.tasks.size();
  std::vector<TaskResult> results(count);
  std::vector<double> millis(count, 0.0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const auto t0 = clock::now();
      try {
        results[i] = run_task(problem, problem.tasks[i]);
      } catch (const std::exception& e) {
        results[i] = {"none", to_json(Witness{std::string("error: ") + e.what(), {}, {}}), json::object()};
      }
      millis[i] = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.parallel, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  json doc;
  doc["results"] = json::array();
  std::size_t pass = 0, fail = 0, none = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Task& t = problem.tasks[i];
    TaskResult& r = results[i];
    (r.verdict == "pass" ? pass : r.verdict == "fail" ? fail : none)++;
    json entry;
    entry["id"] = t.id;
    if (!options.witness_only) entry["op"] = op_name(t.op);
    entry["verdict"] = r.verdict;
    entry["witness"] = std::move(r.witness);
    if (!options.witness_only) entry["derived"] = std::move(r.derived);
    doc["results"].push_back(std::move(entry));
  }
  doc["summary"] = {{"tasks", count}, {"pass", pass}, {"fail", fail}, {"none", none}};
  if (!options.canonical) {
    json timing;
    timing["total_ms"] = std::chrono::duration<double, std::milli>(clock::now() - start).count();
    timing["tasks"] = json::object();
    for (std::size_t i = 0; i < count; ++i) timing["tasks"][problem.tasks[i].id] = millis[i];
    doc["timing"] = std::move(timing);
  }
  return {pass == count ? 0 : 1, doc.dump(2) + "\n", ""};
}

RunOutcome run_file(const std::filesystem::path& path, const RunOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {2, "", "error: cannot read " + path.string() + "\n"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return run_text(buf.str(), options);
}

}  // namespace kumlift::cli
