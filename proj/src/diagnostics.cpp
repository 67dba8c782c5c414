#include "symf/diagnostics.hpp"

#include <iostream>
#include <mutex>

namespace symf {

namespace {

std::mutex& handler_mutex()
{
    static std::mutex m;
    return m;
}

WarningHandler& current_handler()
{
    static WarningHandler h = [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; };
    return h;
}

} // namespace

WarningHandler set_warning_handler(WarningHandler handler)
{
    std::lock_guard lock(handler_mutex());
    auto previous = std::move(current_handler());
    current_handler() = std::move(handler);
    return previous;
}

void warn(const std::string& message)
{
    WarningHandler h;
    {
        std::lock_guard lock(handler_mutex());
        h = current_handler();
    }
    if (h)
        h(message);
}

} // namespace symf
