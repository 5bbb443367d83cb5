#include "planecomp/certificate.hpp"

namespace planecomp {

bool Certificate::pass() const noexcept {
    if (checks.empty()) return false;
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void Certificate::add(std::string name, bool pass, std::optional<Witness> witness) {
    checks.push_back({std::move(name), pass, std::move(witness)});
}

void Certificate::absorb(const Certificate& other, const std::string& prefix) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.witness});
}

const Check* Certificate::find(std::string_view name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

Json Certificate::to_json() const {
    Json j;
    j["construction"] = construction;
    j["field"] = field.to_string();
    j["input"] = input;
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (c.witness) {
            Json w;
            w["n"] = c.witness->n ? Json(*c.witness->n) : Json(nullptr);
            w["lambda"] = c.witness->lambda ? Json(c.witness->lambda->to_string()) : Json(nullptr);
            w["residual"] = c.witness->residual ? poly_to_json(*c.witness->residual) : Json(nullptr);
            cj["witness"] = w;
        } else {
            cj["witness"] = nullptr;
        }
        arr.push_back(cj);
    }
    j["checks"] = arr;
    if (!notes.empty()) j["notes"] = notes;
    j["pass"] = pass();
    return j;
}

}  // namespace planecomp
