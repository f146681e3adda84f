#include "plethysm/json_io.hpp"

namespace plethysm {

using nlohmann::json;

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const BigInt& b) { return json(b.str()); }

json to_json(const TensorVector& v) {
  json arr = json::array();
  for (const auto& [factors, coeff] : v.terms())
    arr.push_back({{"coeff", coeff.str()}, {"factors", factors}});
  return arr;
}

json to_json(const SymVector& v) {
  json arr = json::array();
  for (const auto& [multiset, coeff] : v.terms())
    arr.push_back({{"coeff", coeff.str()}, {"multiset", multiset}});
  return arr;
}

json to_json(const PieriTableau& t) {
  return {{"shape", t.shape.parts()}, {"rows", t.rows}};
}

json to_json(const std::vector<StepRecord>& log) {
  json arr = json::array();
  for (const auto& rec : log) {
    json before = {{"kPrime", rec.k_prime}, {"dPrime", rec.d_prime},
                   {"mPrime", rec.m_prime}, {"lPrime", rec.l_prime},
                   {"oPrime", rec.o_prime}, {"hPrime", rec.h_prime},
                   {"jPrime", rec.j_prime}};
    arr.push_back({{"step", std::string(1, rec.step)}, {"before", before}});
  }
  return arr;
}

json to_json(const SymbolicTableau& st) {
  json grid = json::array();
  for (const auto& row : st.grid) {
    json jrow = json::array();
    for (const auto& cell : row) {
      if (cell.frozen)
        jrow.push_back({{"frozen", cell.value}});
      else
        jrow.push_back({{"slot", {cell.column, cell.position}}});
    }
    grid.push_back(jrow);
  }
  // slot_rows[0] is an unused 1-based indexing pad; entry i of the output
  // belongs to lambda*-column i+1
  json slot_rows = json::array();
  for (size_t s = 1; s < st.slot_rows.size(); ++s)
    slot_rows.push_back(st.slot_rows[s]);
  return {{"lambda", st.lambda.parts()},
          {"k", st.k},
          {"d", st.d},
          {"grid", grid},
          {"slot_rows", slot_rows}};
}

json to_json(const HighestWeightReport& r) {
  json out = {{"nonzero", r.nonzero},
              {"weight_ok", r.weight_ok},
              {"killed", r.killed},
              {"pass", r.pass()}};
  if (!r.killed) out["failed_j"] = r.failed_j;
  return out;
}

json to_json(const QCertificate& q) {
  return {{"multiset", q.multiset},
          {"coefficient", q.coefficient.str()},
          {"positive", q.positive},
          {"all_paired", q.all_paired},
          {"contributors", q.contributors.size()}};
}

json to_json(const DecompositionTable& t) {
  json comps = json::array();
  for (const auto& [mu, mult] : t.components)
    comps.push_back({{"partition", mu.parts()}, {"multiplicity", mult.str()}});
  BigInt ambient = t.tuple ? tuple_ambient_dimension(t.k, t.d, t.n, t.functor)
                           : ambient_dimension(t.k, t.d, t.n, t.functor);
  json out = {{"functor", functor_name(t.functor)},
              {"k", t.k},
              {"d", t.d},
              {"n", t.n},
              {"components", comps},
              {"dimension_sum", t.dimension_sum().str()},
              {"ambient_dimension", ambient.str()}};
  if (t.tuple) out["tuple"] = true;
  return out;
}

json to_json(const StabilizationRow& row) {
  return {{"lambda", row.lambda.parts()},
          {"d", row.d},
          {"kmax", row.kmax},
          {"values", row.values},
          {"stable", row.stable.str()},
          {"stabilized", row.stabilized},
          {"nondecreasing", row.nondecreasing},
          {"bijection_ok", row.bijection_ok},
          {"failed_k", row.failed_k}};
}

}  // namespace plethysm
