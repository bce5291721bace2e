#include "lct/report.hpp"

namespace lct {

void Report::add(const std::string& key, const std::string& value) {
    entries_.push_back({key, value});
}

void Report::add(const std::string& key, long value) {
    add(key, std::to_string(value));
}

void Report::add(const std::string& key, std::size_t value) {
    add(key, std::to_string(value));
}

Report& Report::block(const std::string& key) {
    auto sub = std::make_unique<Report>();
    Report& ref = *sub;
    entries_.push_back({key, std::move(sub)});
    return ref;
}

void Report::render(std::string& out, int indent) const {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (const auto& e : entries_) {
        if (std::holds_alternative<std::string>(e.value)) {
            out += pad + e.key + ": " + std::get<std::string>(e.value) + "\n";
        } else {
            out += pad + e.key + ":\n";
            std::get<std::unique_ptr<Report>>(e.value)->render(out, indent + 1);
        }
    }
}

std::string Report::to_machine() const {
    std::string out;
    render(out, 0);
    return out;
}

} // namespace lct
