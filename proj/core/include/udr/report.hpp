#ifndef UDR_REPORT_HPP
#define UDR_REPORT_HPP

#include <string>
#include <vector>

namespace udr {

struct CheckItem {
    std::string name;
    bool pass = true;
    std::string detail;
    // Informational checks are reported but do not flip the overall verdict.
    bool informational = false;
};

struct Report {
    std::vector<CheckItem> items;

    void add(const std::string& name, bool pass, const std::string& detail = "",
             bool informational = false) {
        items.push_back({name, pass, detail, informational});
    }
    void merge(const Report& other) {
        items.insert(items.end(), other.items.begin(), other.items.end());
    }
    bool allPass() const {
        for (const auto& it : items)
            if (!it.pass && !it.informational) return false;
        return true;
    }
    std::size_t failCount() const {
        std::size_t c = 0;
        for (const auto& it : items)
            if (!it.pass && !it.informational) ++c;
        return c;
    }
    /// First failing item, or empty string.
    std::string firstFailure() const {
        for (const auto& it : items)
            if (!it.pass && !it.informational)
                return it.name + (it.detail.empty() ? "" : (": " + it.detail));
        return {};
    }
};

} // namespace udr

#endif
