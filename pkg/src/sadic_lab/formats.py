"""Text and JSON formats for morphisms and directive sequences.

Morphism text::

    alphabet: a b c
    codomain: x y        # optional, defaults to the alphabet
    a -> x y x
    b -> xy              # a single token of one-character names is split

Directive text: a `prefix:` line and/or a `cycle:` line, each followed by
morphism blocks; every block starts with its own `alphabet:` line.
"""

import json
from importlib.resources import files

from .directive import DirectiveSequence
from .errors import InputError
from .morphism import Alphabet, Morphism


def _strip(line):
    return line.split("#", 1)[0].strip()


def _image(tokens, codomain):
    if len(tokens) == 1 and tokens[0] not in {codomain.name(a) for a in codomain.letters()}:
        return codomain.word(list(tokens[0]))
    return tuple(codomain.index(t) for t in tokens)


def _morphism_block(lines):
    domain = codomain = None
    images = {}
    for line in lines:
        if line.startswith("alphabet:"):
            domain = Alphabet.of(line.split(":", 1)[1].split())
        elif line.startswith("codomain:"):
            codomain = Alphabet.of(line.split(":", 1)[1].split())
        elif "->" in line:
            if domain is None:
                raise InputError("image line before the alphabet line")
            lhs, rhs = (s.strip() for s in line.split("->", 1))
            a = domain.index(lhs)
            if a in images:
                raise InputError(f"letter {lhs!r} mapped twice")
            images[a] = rhs.split()
        else:
            raise InputError(f"cannot read line {line!r}")
    if domain is None:
        raise InputError("missing alphabet line")
    codomain = codomain or domain
    missing = [domain.name(a) for a in domain.letters() if a not in images]
    if missing:
        raise InputError(f"no image for {', '.join(missing)}")
    return Morphism(domain, codomain, tuple(_image(images[a], codomain) for a in domain.letters()))


def parse_morphism(text):
    text = text.strip()
    if text.startswith("{"):
        try:
            return Morphism.from_json(json.loads(text))
        except json.JSONDecodeError as e:
            raise InputError(f"bad JSON: {e}") from None
    lines = [s for s in map(_strip, text.splitlines()) if s]
    if any(s in ("prefix:", "cycle:") for s in lines):
        raise InputError("expected a single morphism, found a directive sequence")
    return _morphism_block(lines)


def _blocks(lines):
    out, cur = [], None
    for line in lines:
        if line.startswith("alphabet:"):
            cur = [line]
            out.append(cur)
        elif cur is None:
            raise InputError(f"line {line!r} outside a morphism block")
        else:
            cur.append(line)
    return [_morphism_block(b) for b in out]


def parse_directive(text):
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError(f"bad JSON: {e}") from None
        if "images" in data:
            return DirectiveSequence.stationary(Morphism.from_json(data))
        prefix = [Morphism.from_json(m) for m in data.get("prefix") or []]
        cycle = [Morphism.from_json(m) for m in data.get("cycle") or []]
        return DirectiveSequence(tuple(prefix), tuple(cycle) or None)
    lines = [s for s in map(_strip, text.splitlines()) if s]
    if not any(s in ("prefix:", "cycle:") for s in lines):
        return DirectiveSequence.stationary(_morphism_block(lines))
    sections = {"prefix:": [], "cycle:": []}
    current = None
    for line in lines:
        if line in sections:
            current = line
        elif current is None:
            raise InputError("directive text must start with prefix: or cycle:")
        else:
            sections[current].append(line)
    prefix = _blocks(sections["prefix:"])
    cycle = _blocks(sections["cycle:"])
    return DirectiveSequence(tuple(prefix), tuple(cycle) or None)


def morphism_text(m):
    lines = ["alphabet: " + " ".join(m.domain.name(a) for a in m.domain.letters())]
    if m.codomain is not m.domain and m.codomain != m.domain:
        lines.append("codomain: " + " ".join(m.codomain.name(a) for a in m.codomain.letters()))
    for a, img in enumerate(m.images):
        lines.append(f"{m.domain.name(a)} -> " + " ".join(m.codomain.name(b) for b in img))
    return "\n".join(lines) + "\n"


def directive_text(D):
    out = []
    if D.prefix:
        out.append("prefix:")
        out.extend(morphism_text(m) for m in D.prefix)
    if D.cycle:
        out.append("cycle:")
        out.extend(morphism_text(m) for m in D.cycle)
    return "\n".join(s.rstrip("\n") for s in out) + "\n"


def load_schema(name):
    """One of the shipped JSON schemas: analyze, sadic or bratteli."""
    return json.loads(files("sadic_lab").joinpath("schemas", f"{name}.json").read_text())
