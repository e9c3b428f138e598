#include "cphi6/report.hpp"

#include <sstream>

#include "json.hpp"

namespace cphi6 {

std::string to_json(const Report &r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["status"] = r.pass ? "pass" : "fail";
    j["checks"] = nlohmann::ordered_json::array();
    for (const Check &c : r.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["anchor"] = c.anchor;
        jc["status"] = c.pass ? "pass" : "fail";
        if (c.witness.empty())
            jc["witness"] = nullptr;
        else
            jc["witness"] = c.witness;
        j["checks"].push_back(std::move(jc));
    }
    j["ms"] = r.ms;
    return j.dump(2);
}

std::string to_text(const Report &r) {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const Check &c : r.checks)
        if (!c.pass) ++failed;
    os << "suite " << r.suite << ": " << (r.pass ? "pass" : "FAIL") << " ("
       << r.checks.size() - failed << "/" << r.checks.size() << " checks, " << r.ms << " ms)\n";
    for (const Check &c : r.checks) {
        os << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.id;
        if (!c.description.empty()) os << ": " << c.description;
        os << "\n";
        if (!c.anchor.empty()) os << "          anchor  " << c.anchor << "\n";
        if (!c.witness.empty()) os << "          witness " << c.witness << "\n";
    }
    return os.str();
}

} // namespace cphi6
