#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace lct {

// Ordered key/value tree behind the CLI's structured output: one
// "key: value" per line, nested blocks indented two spaces.
class Report {
public:
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, long value);
    void add(const std::string& key, std::size_t value);
    Report& block(const std::string& key);

    std::string to_machine() const;

private:
    struct Entry {
        std::string key;
        std::variant<std::string, std::unique_ptr<Report>> value;
    };
    std::vector<Entry> entries_;
    void render(std::string& out, int indent) const;
};

} // namespace lct
