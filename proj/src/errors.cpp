#include "jhplab/errors.hpp"

#include <cstdlib>
#include <string>

namespace jhplab {

int default_dimension_bound()
{
    if (const char* env = std::getenv("JHP_LAB_BOUND")) {
        try {
            int b = std::stoi(env);
            if (b > 0 && b <= 24)
                return b;
        } catch (const std::exception&) {
        }
    }
    return 8;
}

} // namespace jhplab
