#include "hbl/parallel.hpp"

#include <atomic>

namespace hbl {

namespace {
std::atomic<Exec> g_default{Exec::parallel};
}

Exec default_exec() { return g_default.load(); }
void set_default_exec(Exec e) { g_default.store(e); }

}  // namespace hbl
