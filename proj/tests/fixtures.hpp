#pragma once

#include "sw/classify.hpp"

// Heavy group bundles are shared across the whole test binary.
inline sw::Workspace& ws() {
    static sw::Workspace w;
    return w;
}
