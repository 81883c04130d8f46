#pragma once

#include <useq/expr/ast.hpp>

#include <random>
#include <string>
#include <vector>

namespace testutil {

/// Bounded random AST for the print/parse round-trip property. Literals
/// are nonnegative, matching what the parser itself can produce (a leading
/// minus always parses as a negate node).
inline useq::expr::node_ptr gen_tree(std::mt19937_64& rng, int depth) {
    using namespace useq::expr;
    std::uniform_int_distribution<int> leaf_pick(0, 2);
    std::uniform_int_distribution<int> node_pick(0, 9);
    std::uniform_int_distribution<long> num_pick(0, 12);
    std::uniform_int_distribution<long> den_pick(1, 4);
    static const std::vector<std::string> names = {"x", "y", "m", "k"};
    static const std::vector<std::string> indices = {"i", "j"};
    std::uniform_int_distribution<std::size_t> name_pick(0, names.size() - 1);
    std::uniform_int_distribution<std::size_t> index_pick(0, indices.size() - 1);

    const int choice = depth <= 0 ? leaf_pick(rng) : node_pick(rng);
    switch (choice) {
        case 0:
        case 1:
            return make_node(
                literal{useq::rational(mpz_class(num_pick(rng)), mpz_class(den_pick(rng)))});
        case 2:
            return make_node(variable{names[name_pick(rng)]});
        case 3:
        case 4:
        case 5:
        case 6: {
            std::uniform_int_distribution<int> op_pick(0, 4);
            const auto op = static_cast<binary_op>(op_pick(rng));
            return make_node(binary{op, gen_tree(rng, depth - 1), gen_tree(rng, depth - 1)});
        }
        case 7:
            return make_node(negate{gen_tree(rng, depth - 1)});
        case 8: {
            std::uniform_int_distribution<int> fn_pick(0, 4);
            const auto fn = static_cast<seq_fn>(fn_pick(rng));
            std::vector<node_ptr> args;
            for (std::size_t i = 0; i < arity(fn); ++i) args.push_back(gen_tree(rng, depth - 1));
            return make_node(seq_call{fn, std::move(args)});
        }
        default:
            return make_node(sum{indices[index_pick(rng)], gen_tree(rng, depth - 1),
                                 gen_tree(rng, depth - 1), gen_tree(rng, depth - 1)});
    }
}

}  // namespace testutil
