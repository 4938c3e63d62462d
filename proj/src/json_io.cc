// Copyright 2026 The lmc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "lmc/json_io.h"

#include <stdexcept>

namespace lmc {

namespace {

Json subset_json(VertexSet s) {
    return Json(s.to_vector());
}

Json complex_json(std::complex<double> z) {
    return Json::array({z.real(), z.imag()});
}

}  // namespace

Json to_json(const DiagonalHamiltonian &h) {
    Json terms = Json::array();
    if (h.constant() != 0) {
        terms.push_back({{"subset", Json::array()}, {"weight", h.constant()}});
    }
    for (const auto &t : h.terms()) {
        terms.push_back({{"subset", subset_json(t.support)}, {"weight", t.weight}});
    }
    return {{"num_qubits", h.num_qubits()}, {"terms", terms}};
}

DiagonalHamiltonian hamiltonian_from_json(const Json &j) {
    const std::size_t n = j.at("num_qubits").get<std::size_t>();
    std::vector<PauliTerm> terms;
    for (const auto &t : j.at("terms")) {
        auto verts = t.at("subset").get<std::vector<std::size_t>>();
        for (auto v : verts) {
            if (v >= n) {
                throw std::invalid_argument("term vertex " + std::to_string(v) + " out of range");
            }
        }
        terms.push_back({VertexSet::from_vertices(verts), t.at("weight").get<double>()});
    }
    return DiagonalHamiltonian::from_terms(n, terms);
}

Json to_json(const ZkBreakdown &b) {
    Json per_l = Json::array();
    for (const auto &c : b.per_l) {
        Json fams = Json::array();
        for (const auto &f : c.families) {
            Json members = Json::array();
            for (auto m : f.members) {
                members.push_back(subset_json(m));
            }
            fams.push_back({{"members", members}, {"alpha", complex_json(f.alpha)}});
        }
        per_l.push_back({{"L", subset_json(c.l)}, {"nu", complex_json(c.nu)}, {"families", fams},
                         {"rho", complex_json(c.rho)}});
    }
    return {{"K", subset_json(b.k)}, {"per_L", per_l}, {"raw_total", complex_json(b.raw_total)}, {"total", b.total}};
}

Json to_json(const ClassicalParams &params) {
    return {{"p", params.p}, {"q", params.q}};
}

Json to_json(const RunStats &stats, bool include_counts) {
    Json j{{"trials", stats.trials},
           {"num_vertices", stats.num_vertices},
           {"mean", stats.mean},
           {"stderr", stats.std_error}};
    if (include_counts) {
        j["counts"] = stats.counts;
    }
    return j;
}

Json to_json(const OptimizationReport &r) {
    Json maxima = Json::array();
    for (const auto &m : r.maxima) {
        maxima.push_back({{"point", m.point}, {"value", m.value}});
    }
    return {{"objective", r.objective},
            {"parameters", r.parameter_names},
            {"argmax", r.argmax},
            {"value", r.value},
            {"trace",
             {{"grid_resolution", r.grid_resolution},
              {"grid_best_value", r.grid_best_value},
              {"starts", r.starts},
              {"iterations", r.iterations},
              {"tolerance", r.tolerance},
              {"achieved_diameter", r.achieved_diameter},
              {"converged", r.converged}}},
            {"maxima", maxima}};
}

}  // namespace lmc
