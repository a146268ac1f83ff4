/*
   Copyright 2026 The hopfore Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
   JSON forms of decompositions, verification reports, explicit modules and
   algebras. Scalars are cyclotomic literal strings ("1/2", "-1+w^2").

   Custom algebra input:
     {
       "field_order": 4,                      // n in Q(zeta_n); w = zeta_n
       "mul_table": [[0,1,2,3], ...],         // mul_table[g][h] = index of g*h
       "generators": [1],                     // element indices
       "element_names": ["1","g","g2","g3"],  // optional
       "simples": [{"id": "c0", "matrices": [[["1"]]]}, ...],  // one matrix per generator
       "chi": ["w"],                          // chi on each generator
       "central": 1                           // element index of a
     }
*/

#ifndef HOPFORE_IO_JSON_HPP
#define HOPFORE_IO_JSON_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "hopfore/decomp/decompose.hpp"
#include "hopfore/greenring/presentation.hpp"

namespace hopfore {

using Json = nlohmann::ordered_json;

inline Json label_to_json(const AlgebraData& alg, const IndecLabel& L, long mult) {
    Json j;
    j["kind"] = L.is_nil() ? "nil" : "eig";
    j["t"] = L.t;
    j["i"] = alg.name(L.i);
    j["beta"] = L.is_nil() ? Json(nullptr) : Json(L.beta.to_string());
    j["mult"] = mult;
    j["label"] = format_label(alg, L);
    return j;
}

/// Summands in label order, which is deterministic.
inline Json multiset_to_json(const AlgebraData& alg, const LabelMultiset<IndecLabel>& ms) {
    Json arr = Json::array();
    for (const auto& [label, mult] : ms) arr.push_back(label_to_json(alg, label, mult));
    return arr;
}

inline Json decomposition_to_json(const AlgebraData& alg, const DecompResult& r) {
    Json j;
    j["summands"] = multiset_to_json(alg, r.multiset);
    j["total_dim"] = r.total_dim;
    Json ev = Json::array();
    for (const auto& c : r.eigenvalues_found) ev.push_back(c.to_string());
    j["eigenvalues"] = ev;
    return j;
}

inline Json report_to_json(const std::vector<IdentityCheck>& report) {
    Json arr = Json::array();
    for (const auto& c : report)
        arr.push_back({{"identity_name", c.identity_name},
                       {"family", c.family},
                       {"status", c.pass ? "pass" : "fail"},
                       {"lhs", c.lhs},
                       {"rhs", c.rhs}});
    return arr;
}

inline Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(row);
    }
    return rows;
}

inline Matrix matrix_from_json(const Json& j, int order) {
    if (!j.is_array()) throw Error(ErrorKind::InvalidParameter, "matrix must be an array of rows");
    std::vector<std::vector<Cyclotomic>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw Error(ErrorKind::InvalidParameter, "matrix row must be an array");
        std::vector<Cyclotomic> r;
        for (const auto& e : row) {
            if (e.is_number_integer())
                r.emplace_back(order, e.get<long>());
            else if (e.is_string())
                r.push_back(parse_cyclotomic(e.get<std::string>(), order));
            else
                throw Error(ErrorKind::InvalidParameter, "matrix entries must be strings or integers");
        }
        rows.push_back(std::move(r));
    }
    return Matrix::from_rows(order, rows);
}

inline Json module_to_json(const ExplicitModule& m) {
    const AlgebraData& alg = *m.alg;
    Json j;
    if (m.label_hint) j["label"] = format_label(alg, *m.label_hint);
    j["dim"] = m.dim;
    j["field_order"] = alg.field_order();
    Json gens = Json::array();
    for (std::size_t k = 0; k < m.gen_actions.size(); ++k)
        gens.push_back({{"element", alg.group().name(alg.group().generators()[k])}, {"matrix", matrix_to_json(m.gen_actions[k])}});
    j["generators"] = gens;
    j["x"] = matrix_to_json(m.x_action);
    Json prov = Json::array();
    for (const auto& c : m.provenance) prov.push_back(c.to_string());
    j["x_s_eigenvalue_hints"] = prov;
    return j;
}

inline Json algebra_summary_to_json(const AlgebraData& alg) {
    Json j;
    j["group_order"] = alg.group().size();
    j["field_order"] = alg.field_order();
    j["central"] = alg.group().name(alg.central());
    j["q"] = alg.q().to_string();
    j["s"] = alg.s();
    j["fusion_ready"] = alg.fusion_ready();
    Json simples = Json::array();
    for (SimpleIndex i = 0; i < alg.simple_count(); ++i)
        simples.push_back({{"id", alg.name(i)},
                           {"dim", alg.dim(i)},
                           {"sigma", alg.name(alg.sigma(i))},
                           {"omega", alg.omega(i).to_string()},
                           {"orbit_representative", alg.name(alg.representative(i))}});
    j["simples"] = simples;
    Json reps = Json::array();
    for (SimpleIndex i : alg.representatives()) reps.push_back(alg.name(i));
    j["representatives"] = reps;
    return j;
}

inline AlgebraData algebra_from_json(const Json& j) {
    try {
        const int order = j.at("field_order").get<int>();
        if (order < 1) throw Error(ErrorKind::InvalidParameter, "field_order must be positive");
        auto table = j.at("mul_table").get<std::vector<std::vector<std::size_t>>>();
        auto gens = j.at("generators").get<std::vector<std::size_t>>();
        std::vector<std::string> names;
        if (j.contains("element_names")) names = j.at("element_names").get<std::vector<std::string>>();
        GroupData group(std::move(table), gens, std::move(names));

        std::vector<SimpleRep> simples;
        for (const auto& s : j.at("simples")) {
            SimpleRep rep;
            rep.id = s.at("id").get<std::string>();
            for (const auto& m : s.at("matrices")) rep.gen_matrices.push_back(matrix_from_json(m, order));
            if (rep.gen_matrices.size() != gens.size())
                throw Error(ErrorKind::InvalidParameter, "simple '" + rep.id + "' needs one matrix per generator");
            simples.push_back(std::move(rep));
        }

        const auto& chi_j = j.at("chi");
        if (chi_j.size() != gens.size()) throw Error(ErrorKind::InvalidParameter, "chi needs one value per generator");
        std::vector<Cyclotomic> chi_gen;
        for (const auto& c : chi_j)
            chi_gen.push_back(c.is_number_integer() ? Cyclotomic(order, c.get<long>()) : parse_cyclotomic(c.get<std::string>(), order));
        std::vector<Cyclotomic> chi;
        for (std::size_t g = 0; g < group.size(); ++g) {
            Cyclotomic v(order, 1);
            for (std::size_t k : group.word(g)) v *= chi_gen[k];
            chi.push_back(v);
        }
        const auto central = j.at("central").get<std::size_t>();
        return custom_algebra(std::move(group), std::move(simples), central, std::move(chi));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidParameter, std::string("algebra file: ") + e.what());
    }
}

}  // namespace hopfore

#endif
