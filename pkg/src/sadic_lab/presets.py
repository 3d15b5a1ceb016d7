"""Named morphisms and directive sequences used throughout the tests and CLI."""

from .directive import DirectiveSequence
from .errors import InputError
from .morphism import Alphabet, Morphism, conjugate_by_coding, identity
from .sadic import iterated_pair_coding_sequence


def fibonacci():
    return Morphism.from_strings({"0": "01", "1": "0"})


def thue_morse():
    return Morphism.from_strings({"0": "01", "1": "10"})


def split_ones():
    return Morphism.from_strings({"0": "0010", "1": "11"})


def mosse_nonunilateral():
    return Morphism.from_strings({"0": "010", "1": "10"})


def arnoux_rauzy(i, letters=3):
    """mu_i on {1..letters}: i -> i and j -> j i."""
    names = [str(k) for k in range(1, letters + 1)]
    images = {n: n if n == str(i) else n + str(i) for n in names}
    return Morphism.from_strings(images)


def theta():
    return Morphism.from_strings({"0": "00100", "1": "00000"})


def sigma0():
    return Morphism.from_strings({"A": "00", "B": "01", "C": "10"}, codomain=Alphabet.of("01"))


def theta1():
    return conjugate_by_coding(theta(), sigma0())


def sigma0_alt():
    """A substitution on {A, B, C} that can stand in for the pair coding."""
    return Morphism.from_strings({"A": "AA", "B": "ABC", "C": "BCA"})


def pair_coded():
    return DirectiveSequence((sigma0(),), (theta1(),))


def pair_coded_alt():
    t1 = theta1()
    alt = Morphism(t1.domain, t1.domain, sigma0_alt().images)
    return DirectiveSequence((alt,), (t1,))


def arnoux_rauzy_123():
    return DirectiveSequence((), tuple(arnoux_rauzy(i) for i in (1, 2, 3)))


def five_to_three():
    """Two-level input whose first incidence matrix is
    [[1,3,1,1,0],[0,1,1,1,1],[0,0,0,1,4]]; letter order inside images is sorted."""
    s = Morphism.from_strings(["0", "0001", "01", "012", "12222"],
                              domain=Alphabet(5), codomain=Alphabet(3))
    return DirectiveSequence((s,))


MORPHISMS = {
    "fibonacci": fibonacci,
    "thue-morse": thue_morse,
    "split-ones": split_ones,
    "mosse-nonunilateral": mosse_nonunilateral,
    "arnoux-rauzy": lambda: arnoux_rauzy(1),
    "arnoux-rauzy-2": lambda: arnoux_rauzy(2),
    "arnoux-rauzy-3": lambda: arnoux_rauzy(3),
    "theta": theta,
    "theta1": theta1,
    "sigma0": sigma0,
    "identity": lambda: identity(Alphabet(2)),
}

SEQUENCES = {
    "pair-coded": pair_coded,
    "pair-coded-alt": pair_coded_alt,
    "iterated-pair-coding": iterated_pair_coding_sequence,
    "arnoux-rauzy-123": arnoux_rauzy_123,
    "five-to-three": five_to_three,
}


def names():
    return sorted(set(MORPHISMS) | set(SEQUENCES))


def morphism(name):
    if name not in MORPHISMS:
        raise InputError(f"unknown morphism preset {name!r}; choose from {', '.join(sorted(MORPHISMS))}")
    return MORPHISMS[name]()


def sequence(name):
    """A directive sequence; morphism presets that are substitutions become stationary."""
    if name in SEQUENCES:
        return SEQUENCES[name]()
    if name in MORPHISMS:
        m = MORPHISMS[name]()
        return DirectiveSequence.stationary(m) if m.is_substitution() else DirectiveSequence((m,))
    raise InputError(f"unknown preset {name!r}; choose from {', '.join(names())}")
