#include "nerode/dfa.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace nerode {

namespace {

// Edge-label algebra for elimination. Absent optionals stand for the empty
// set; the constructors fold the identities x+∅=x, x·∅=∅, x·ε=x and
// (x*)*=x* so intermediate labels stay reasonably small. These rewrites only
// apply here; parsing and printing never reshape a tree.

using Label = std::optional<Regex>;

Label join(Label a, Label b) {
    if (!a)
        return b;
    if (!b)
        return a;
    if (*a == *b)
        return a;
    return Regex::alt(std::move(*a), std::move(*b));
}

Label chain(const Label& a, const Label& b) {
    if (!a || !b)
        return std::nullopt;
    if (a->is_epsilon())
        return b;
    if (b->is_epsilon())
        return a;
    return Regex::concat(*a, *b);
}

Regex looped(const Label& self) {
    if (!self || self->kind() == Regex::Kind::Empty || self->is_epsilon())
        return Regex::epsilon();
    if (self->kind() == Regex::Kind::Star)
        return *self;
    return Regex::star(*self);
}

} // namespace

Regex dfa_to_regex(const Dfa& d) {
    const int n = d.state_count();
    const int source = n;     // fresh entry node
    const int target = n + 1; // fresh accepting node
    std::vector<std::vector<Label>> label(
        static_cast<size_t>(n + 2), std::vector<Label>(static_cast<size_t>(n + 2)));

    label[static_cast<size_t>(source)][static_cast<size_t>(d.initial())] = Regex::epsilon();
    for (int f : d.finals())
        label[static_cast<size_t>(f)][static_cast<size_t>(target)] = Regex::epsilon();
    for (int s = 0; s < n; ++s)
        for (int i = 0; i < d.alphabet().size(); ++i) {
            int t = d.next_by_index(s, i);
            auto& slot = label[static_cast<size_t>(s)][static_cast<size_t>(t)];
            slot = join(std::move(slot), Regex::symbol(d.alphabet().symbol(i)));
        }

    std::vector<int> alive;
    for (int s = 0; s < n; ++s)
        alive.push_back(s);
    alive.push_back(source);
    alive.push_back(target);

    // Remove original states from the highest id down; source and target
    // survive to the end.
    for (int victim = n - 1; victim >= 0; --victim) {
        Regex loop = looped(label[static_cast<size_t>(victim)][static_cast<size_t>(victim)]);
        for (int p : alive) {
            if (p == victim)
                continue;
            const Label& in = label[static_cast<size_t>(p)][static_cast<size_t>(victim)];
            if (!in)
                continue;
            for (int q : alive) {
                if (q == victim)
                    continue;
                const Label& out = label[static_cast<size_t>(victim)][static_cast<size_t>(q)];
                if (!out)
                    continue;
                Label detour = chain(chain(in, loop), out);
                auto& slot = label[static_cast<size_t>(p)][static_cast<size_t>(q)];
                slot = join(std::move(slot), std::move(detour));
            }
        }
        alive.erase(std::find(alive.begin(), alive.end(), victim));
    }

    Label result = label[static_cast<size_t>(source)][static_cast<size_t>(target)];
    return result ? *result : Regex::empty();
}

} // namespace nerode
