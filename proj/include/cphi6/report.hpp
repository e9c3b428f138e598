#ifndef CPHI6_REPORT_HPP
#define CPHI6_REPORT_HPP

/* Suite reports: a flat list of named checks, each carrying the printed
 * source form it certifies (anchor) and, when something went wrong, a
 * witness describing the first failure.  Reports serialize to aligned text
 * or to the JSON document
 *   {"suite":str,"status":str,"checks":[{"id","anchor","status","witness"}],"ms":int}
 * with witness null when empty.  Content is deterministic for a fixed
 * configuration; only the ms field varies between runs. */

#include <string>
#include <vector>

namespace cphi6 {

struct Check {
    std::string id;
    std::string description;
    std::string anchor;  /* printed form being certified, empty for plumbing */
    bool pass = false;
    std::string witness; /* first failure, or informational detail */
};

struct Report {
    std::string suite;
    bool pass = true;
    std::vector<Check> checks;
    long ms = 0;

    void add(Check c) {
        pass = pass && c.pass;
        checks.push_back(std::move(c));
    }
};

std::string to_json(const Report &r);
std::string to_text(const Report &r);

} // namespace cphi6

#endif
