#include "committee_lab/election.hpp"

#include <algorithm>

#include "json.hpp"

namespace committee_lab {

void Election::validate() const {
    if (candidates.empty()) throw config_error("election needs at least one candidate");
    if (voters.empty()) throw config_error("election needs at least one voter");
    for (const auto& p : candidates)
        if (!is_finite(p)) throw config_error("candidate position is not finite");
    for (const auto& p : voters)
        if (!is_finite(p)) throw config_error("voter position is not finite");
    for (const auto& p : party_centers)
        if (!is_finite(p)) throw config_error("party center is not finite");
}

bool Committee::contains(int candidate) const {
    return std::binary_search(members.begin(), members.end(), candidate);
}

Committee Committee::of(std::vector<int> members, int num_candidates) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw usage_error("committee has duplicate members");
    if (!members.empty() && (members.front() < 0 || members.back() >= num_candidates))
        throw usage_error("committee member index out of range");
    return Committee{std::move(members)};
}

namespace {

nlohmann::json points_to_json(const std::vector<Point2D>& pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : pts) arr.push_back({p.x, p.y});
    return arr;
}

std::vector<Point2D> points_from_json(const nlohmann::json& arr, const char* what) {
    if (!arr.is_array()) throw config_error(std::string(what) + " must be an array");
    std::vector<Point2D> pts;
    pts.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
            throw config_error(std::string(what) + " entries must be [x, y] pairs");
        Point2D p{item[0].get<double>(), item[1].get<double>()};
        if (!is_finite(p)) throw config_error(std::string(what) + " entry is not finite");
        pts.push_back(p);
    }
    return pts;
}

}  // namespace

std::string serialize_election(const Election& e) {
    e.validate();
    nlohmann::json j;
    j["candidates"] = points_to_json(e.candidates);
    j["voters"] = points_to_json(e.voters);
    if (!e.party_centers.empty()) j["party_centers"] = points_to_json(e.party_centers);
    return j.dump();
}

Election parse_election(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw config_error(std::string("election document is not valid JSON: ") + ex.what());
    }
    Election e;
    if (!j.contains("candidates") || !j.contains("voters"))
        throw config_error("election document needs candidates and voters");
    e.candidates = points_from_json(j["candidates"], "candidates");
    e.voters = points_from_json(j["voters"], "voters");
    if (j.contains("party_centers")) e.party_centers = points_from_json(j["party_centers"], "party_centers");
    e.validate();
    return e;
}

}  // namespace committee_lab
