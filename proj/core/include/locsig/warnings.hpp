#pragma once

#include <functional>
#include <string>

namespace locsig {

using WarningHandler = std::function<void(const std::string&)>;

/// Installs a custom sink for library warnings. A custom sink receives
/// every warning regardless of LOCSIG_NO_WARN. Pass nullptr to restore
/// the default sink (stderr, suppressed when LOCSIG_NO_WARN is set).
void set_warning_handler(WarningHandler handler);

void emit_warning(const std::string& message);

} // namespace locsig
