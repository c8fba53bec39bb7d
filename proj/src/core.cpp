#include "clonelab/core.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace clonelab {

std::vector<int> LinearOrder::positions() const {
    std::vector<int> pos(ranking.size(), -1);
    for (int i = 0; i < size(); ++i) pos[ranking[i]] = i;
    return pos;
}

LinearOrder reverse_order(const LinearOrder& r) {
    LinearOrder out = r;
    std::reverse(out.ranking.begin(), out.ranking.end());
    return out;
}

void Profile::validate() const {
    if (m < 1) throw std::invalid_argument("profile needs at least one candidate");
    if (orders.empty()) throw std::invalid_argument("profile needs at least one voter");
    if (names && static_cast<int>(names->size()) != m)
        throw std::invalid_argument("names table size differs from m");
    for (size_t v = 0; v < orders.size(); ++v) {
        const auto& r = orders[v].ranking;
        if (static_cast<int>(r.size()) != m)
            throw std::invalid_argument("order of voter " + std::to_string(v + 1) +
                                        " has wrong length");
        std::vector<char> seen(m, 0);
        for (CandidateId c : r) {
            if (c < 0 || c >= m)
                throw std::invalid_argument("order of voter " + std::to_string(v + 1) +
                                            " names candidate out of range");
            if (seen[c]++)
                throw std::invalid_argument("order of voter " + std::to_string(v + 1) +
                                            " repeats a candidate");
        }
    }
}

CandidateSet peaks(const Profile& p) {
    CandidateSet out;
    for (const auto& r : p.orders) out.push_back(r.top());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DecloneResult declone(const Profile& p, const std::vector<CandidateSet>& sets) {
    // owner[c] = index of the set containing c, or -1.
    std::vector<int> owner(p.m, -1);
    for (size_t s = 0; s < sets.size(); ++s) {
        if (sets[s].empty()) throw std::invalid_argument("declone: empty set");
        for (CandidateId c : sets[s]) {
            if (c < 0 || c >= p.m) throw std::invalid_argument("declone: candidate out of range");
            if (owner[c] != -1) throw std::invalid_argument("declone: overlapping sets");
            owner[c] = static_cast<int>(s);
        }
    }

    DecloneResult res;
    // Survivors first, keeping relative order; fresh ids appended in set order.
    std::vector<CandidateId> new_id(p.m, -1);
    int next = 0;
    for (CandidateId c = 0; c < p.m; ++c)
        if (owner[c] == -1) {
            new_id[c] = next;
            res.survivors[c] = next;
            ++next;
        }
    std::vector<CandidateId> fresh(sets.size());
    for (size_t s = 0; s < sets.size(); ++s) {
        fresh[s] = next++;
        CandidateSet canon = sets[s];
        std::sort(canon.begin(), canon.end());
        res.mapping.emplace_back(std::move(canon), fresh[s]);
    }

    Profile q;
    q.m = next;
    for (size_t v = 0; v < p.orders.size(); ++v) {
        const auto& r = p.orders[v].ranking;
        LinearOrder nr;
        nr.ranking.reserve(q.m);
        std::vector<int> left(sets.size());  // members of set s still to come
        for (size_t s = 0; s < sets.size(); ++s) left[s] = static_cast<int>(sets[s].size());
        int open = -1;  // set currently being consumed, must be contiguous
        for (CandidateId c : r) {
            int s = owner[c];
            if (open != -1 && s != open)
                throw std::invalid_argument("declone: set not contiguous in order of voter " +
                                            std::to_string(v + 1));
            if (s == -1) {
                nr.ranking.push_back(new_id[c]);
            } else {
                if (left[s] == static_cast<int>(sets[s].size())) nr.ranking.push_back(fresh[s]);
                if (--left[s] > 0)
                    open = s;
                else
                    open = -1;
            }
        }
        q.orders.push_back(std::move(nr));
    }
    if (p.names) {
        std::vector<std::string> nn(q.m);
        for (auto [orig, nid] : res.survivors) nn[nid] = (*p.names)[orig];
        for (const auto& [set, fid] : res.mapping) {
            std::string joined;
            for (CandidateId c : set) {
                if (!joined.empty()) joined += '+';
                joined += (*p.names)[c];
            }
            nn[fid] = joined;
        }
        q.names = std::move(nn);
    }
    res.profile = std::move(q);
    return res;
}

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(strip(cur));
    return out;
}

}  // namespace

Profile parse_profile(std::istream& in) {
    std::vector<std::pair<int, std::string>> lines;  // (1-based physical line, content)
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        raw = strip(raw);
        if (!raw.empty()) lines.emplace_back(lineno, raw);
    }
    if (lines.empty()) throw parse_error("empty profile file");

    Profile p;
    int n = 0;
    {
        std::istringstream hdr(lines[0].second);
        std::string extra;
        if (!(hdr >> p.m >> n) || (hdr >> extra) || p.m < 1 || n < 1)
            throw parse_error("line " + std::to_string(lines[0].first) +
                              ": malformed header, expected 'm n'");
    }
    size_t idx = 1;
    std::map<std::string, CandidateId> by_name;
    if (idx < lines.size() && lines[idx].second.rfind("names:", 0) == 0) {
        auto toks = split_commas(lines[idx].second.substr(6));
        if (static_cast<int>(toks.size()) != p.m)
            throw parse_error("line " + std::to_string(lines[idx].first) +
                              ": names line must list exactly m names");
        for (int c = 0; c < p.m; ++c) {
            if (toks[c].empty())
                throw parse_error("line " + std::to_string(lines[idx].first) + ": empty name");
            if (!by_name.emplace(toks[c], c).second)
                throw parse_error("line " + std::to_string(lines[idx].first) +
                                  ": duplicate name '" + toks[c] + "'");
        }
        p.names = std::vector<std::string>(toks.begin(), toks.end());
        ++idx;
    }
    if (lines.size() - idx != static_cast<size_t>(n))
        throw parse_error("expected " + std::to_string(n) + " order lines, found " +
                          std::to_string(lines.size() - idx));

    for (int v = 0; v < n; ++v) {
        const auto& [ln, text] = lines[idx + v];
        auto where = [&] { return "order " + std::to_string(v + 1) + " (line " + std::to_string(ln) + ")"; };
        auto toks = split_commas(text);
        if (static_cast<int>(toks.size()) != p.m)
            throw parse_error(where() + ": wrong length, expected " + std::to_string(p.m) +
                              " candidates");
        LinearOrder r;
        std::vector<char> seen(p.m, 0);
        for (const std::string& t : toks) {
            CandidateId c;
            if (auto it = by_name.find(t); it != by_name.end()) {
                c = it->second;
            } else {
                try {
                    size_t used = 0;
                    c = std::stoi(t, &used);
                    if (used != t.size()) throw std::invalid_argument("");
                } catch (...) {
                    throw parse_error(where() + ": unknown candidate '" + t + "'");
                }
                if (c < 0 || c >= p.m)
                    throw parse_error(where() + ": candidate index " + t + " out of range");
            }
            if (seen[c]++) throw parse_error(where() + ": duplicate candidate '" + t + "'");
            r.ranking.push_back(c);
        }
        p.orders.push_back(std::move(r));
    }
    p.validate();
    return p;
}

Profile parse_profile(const std::string& text) {
    std::istringstream in(text);
    return parse_profile(in);
}

Profile load_profile_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open profile file: " + path);
    return parse_profile(in);
}

std::string serialize_profile(const Profile& p) {
    std::string out = std::to_string(p.m) + " " + std::to_string(p.voters()) + "\n";
    if (p.names) {
        out += "names: ";
        for (int c = 0; c < p.m; ++c) {
            if (c) out += ',';
            out += (*p.names)[c];
        }
        out += '\n';
    }
    for (const auto& r : p.orders) {
        for (int i = 0; i < p.m; ++i) {
            if (i) out += ',';
            out += p.names ? (*p.names)[r.ranking[i]] : std::to_string(r.ranking[i]);
        }
        out += '\n';
    }
    return out;
}

std::string profile_to_json(const Profile& p, int indent) {
    nlohmann::ordered_json j;
    j["m"] = p.m;
    if (p.names) j["names"] = *p.names;
    auto& arr = j["orders"] = nlohmann::ordered_json::array();
    for (const auto& r : p.orders) arr.push_back(r.ranking);
    return j.dump(indent);
}

std::string declone_result_to_json(const DecloneResult& r, int indent) {
    nlohmann::ordered_json j;
    j["profile"] = nlohmann::ordered_json::parse(profile_to_json(r.profile));
    auto& maps = j["mapping"] = nlohmann::ordered_json::array();
    for (const auto& [set, fresh] : r.mapping) {
        nlohmann::ordered_json e;
        e["set"] = set;
        e["fresh"] = fresh;
        maps.push_back(std::move(e));
    }
    auto& surv = j["survivors"] = nlohmann::ordered_json::array();
    for (auto [orig, nid] : r.survivors) surv.push_back(std::vector<int>{orig, nid});
    return j.dump(indent);
}

Profile profile_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    Profile p;
    p.m = j.at("m").get<int>();
    if (j.contains("names")) p.names = j["names"].get<std::vector<std::string>>();
    for (const auto& o : j.at("orders")) {
        LinearOrder r;
        r.ranking = o.get<std::vector<CandidateId>>();
        p.orders.push_back(std::move(r));
    }
    p.validate();
    return p;
}

}  // namespace clonelab
