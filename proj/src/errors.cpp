#include "galoiskit/errors.hpp"

namespace galoiskit::audit {

namespace {
thread_local Recorder* current = nullptr;
}

Recorder::Recorder() : previous_(current) { current = this; }

Recorder::~Recorder() { current = previous_; }

void require(bool condition, std::string_view name, std::string_view detail) {
  if (!condition) {
    std::string message = "internal check failed: ";
    message += name;
    if (!detail.empty()) {
      message += " (";
      message += detail;
      message += ")";
    }
    throw SoundnessError(message);
  }
  if (current != nullptr) current->record(name);
}

}  // namespace galoiskit::audit
