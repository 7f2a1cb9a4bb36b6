#include "locsig/warnings.hpp"

#include <cstdlib>
#include <iostream>

namespace locsig {

namespace {
WarningHandler& handler_slot() {
    static WarningHandler handler;
    return handler;
}
} // namespace

void set_warning_handler(WarningHandler handler) { handler_slot() = std::move(handler); }

void emit_warning(const std::string& message) {
    if (const auto& handler = handler_slot()) {
        handler(message);
        return;
    }
    if (std::getenv("LOCSIG_NO_WARN") == nullptr)
        std::cerr << "warning: " << message << '\n';
}

} // namespace locsig
