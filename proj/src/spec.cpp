#include "datasup/spec.hpp"

#include "datasup/error.hpp"

namespace datasup {

SpecLanguage SpecLanguage::finite(Alphabet alphabet, Language words) {
    for (const Word& w : words)
        if (!alphabet.contains(w))
            throw Error(ErrorKind::UnknownEvent, "specification word uses an unknown event");
    return SpecLanguage(std::move(alphabet), std::move(words));
}

SpecLanguage SpecLanguage::automaton(Dfa dfa) {
    Alphabet alphabet = dfa.alphabet();
    return SpecLanguage(std::move(alphabet), std::move(dfa));
}

Dfa SpecLanguage::to_dfa() const {
    if (const auto* words = std::get_if<Language>(&form_))
        return prefix_tree(alphabet_, *words);
    return std::get<Dfa>(form_);
}

bool spec_member(const SpecLanguage& spec, const Word& w) {
    if (!spec.alphabet().contains(w))
        throw Error(ErrorKind::Input, "word is not over the specification's alphabet");
    if (spec.is_finite()) return spec.words().contains(w);
    return accepts(spec.dfa(), w);
}

Language restrict_spec(const Language& d_m, const SpecLanguage& spec) {
    Language out;
    for (const Word& w : d_m)
        if (spec_member(spec, w)) out.insert(w);
    return out;
}

} // namespace datasup
