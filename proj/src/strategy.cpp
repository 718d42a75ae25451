#include "egl/strategy.hpp"

namespace egl {

Move TablebaseStrategy::choose(const Position& pos) const {
    Move fallback = lowest_legal(pos);
    for (Move m : legal_moves(pos)) {
        Position child = pos.apply(m);
        if (solve_value(child, *tb_) == side_) return m;
    }
    return fallback;
}

}  // namespace egl
