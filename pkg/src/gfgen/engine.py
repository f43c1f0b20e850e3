"""Forward-chaining evaluation of the stratified rule families.

The three rule families (structure recognition, main components, complement
discovery) are positive and choice-free in effect, so a least fixpoint over
ground facts replaces a full ASP solver.  Heads with cardinality bounds are
definite: every head atom is derived once the body matches.

Terms are plain ints or lowercase symbol strings; identifiers starting with
an uppercase letter are variables.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Atom:
    predicate: str
    args: tuple

    def __str__(self):
        return "%s(%s)" % (self.predicate, ",".join(str(a) for a in self.args))


def atom(predicate, *args):
    return Atom(predicate, tuple(args))


@dataclass(frozen=True)
class Rule:
    heads: tuple  # every head atom is derived when the body matches
    body: tuple


def rule(heads, body):
    return Rule(tuple(heads), tuple(body))


@dataclass(frozen=True)
class Model:
    """Least fixpoint of a rule family: input facts plus derived atoms."""

    atoms: frozenset
    inputs: frozenset

    @property
    def derived(self):
        return self.atoms - self.inputs

    def with_predicate(self, predicate):
        return {a for a in self.atoms if a.predicate == predicate}


def is_variable(term):
    return isinstance(term, str) and term[:1].isupper()


def _match_atom(pattern, fact, subst):
    if pattern.predicate != fact.predicate or len(pattern.args) != len(fact.args):
        return None
    out = dict(subst)
    for pat, val in zip(pattern.args, fact.args):
        if is_variable(pat):
            if pat in out:
                if out[pat] != val:
                    return None
            else:
                out[pat] = val
        elif pat != val:
            return None
    return out


def bindings(facts, body):
    """All substitutions satisfying a conjunctive body, deterministically ordered."""
    by_pred = {}
    for f in facts:
        by_pred.setdefault(f.predicate, []).append(f)
    for group in by_pred.values():
        group.sort(key=lambda a: a.args)

    results = [dict()]
    for pattern in body:
        candidates = by_pred.get(pattern.predicate, [])
        next_results = []
        for subst in results:
            for fact in candidates:
                extended = _match_atom(pattern, fact, subst)
                if extended is not None:
                    next_results.append(extended)
        results = next_results
        if not results:
            break
    return results


def _substitute(head, subst):
    args = tuple(subst.get(a, a) if is_variable(a) else a for a in head.args)
    if any(is_variable(a) for a in args):
        raise ValueError("unsafe rule head: %s not fully bound" % head)
    return Atom(head.predicate, args)


def derive(facts, rules):
    """Least fixpoint of a rule list over ground facts."""
    atoms = set(facts)
    changed = True
    while changed:
        changed = False
        for r in rules:
            for subst in bindings(atoms, r.body):
                for head in r.heads:
                    ground = _substitute(head, subst)
                    if ground not in atoms:
                        atoms.add(ground)
                        changed = True
    return Model(atoms=frozenset(atoms), inputs=frozenset(facts))


def model_to_text(model):
    """Debug rendering of derived atoms, one fact per line."""
    lines = sorted(str(a) + "." for a in model.derived)
    return "".join(line + "\n" for line in lines)


# --- rule families ----------------------------------------------------------

# Structure recognition.  A nominal subject (active or passive) always yields
# the simplest reading, kind 1; the other kinds consume more relations.
STRUCTURE_RULES = (
    rule([atom("structure", 1, 1)], [atom("nsubj", "V", "S")]),
    rule([atom("structure", 1, 1)], [atom("nsubjpass", "V", "S")]),
    rule(
        [atom("structure", 2, 2)],
        [atom("nsubj", "V", "S"), atom("dobj", "V", "O")],
    ),
    rule(
        [atom("structure", 3, 3)],
        [atom("nsubj", "V1", "S"), atom("xcomp", "V1", "V2"), atom("dobj", "V2", "O")],
    ),
    rule(
        [atom("structure", 4, 2)],
        [atom("nsubj", "O", "S"), atom("cop", "O", "TOBE")],
    ),
    rule(
        [atom("structure", 5, 2)],
        [atom("nsubjpass", "V", "S"), atom("auxpass", "V", "TOBE")],
    ),
)

# Main components per structure.  The copular structure needs the trailing
# component's tag to decide between an adjectival and a nominal predicate.
COMPONENT_RULES = (
    rule([atom("sub", "S"), atom("verb", "V")], [atom("nsubj", "V", "S")]),
    rule(
        [atom("sub", "S"), atom("obj", "O"), atom("verb", "V")],
        [atom("nsubj", "V", "S"), atom("dobj", "V", "O")],
    ),
    rule(
        [atom("sub", "S"), atom("verb", "V")],
        [atom("nsubjpass", "V", "S"), atom("auxpass", "V", "TOBE")],
    ),
    rule(
        [atom("sub", "S"), atom("obj", "O"), atom("verb_1", "V1"), atom("verb_2", "V2")],
        [atom("nsubj", "V1", "S"), atom("xcomp", "V1", "V2"), atom("dobj", "V2", "O")],
    ),
    rule(
        [atom("sub", "S"), atom("adj", "O")],
        [atom("nsubj", "O", "S"), atom("pos_tag", "O", "jj")],
    ),
    rule(
        [atom("sub", "S"), atom("obj", "O")],
        [atom("nsubj", "O", "S"), atom("pos_tag", "O", "nn")],
    ),
    rule(
        [atom("sub", "S"), atom("obj", "O")],
        [atom("nsubj", "O", "S"), atom("pos_tag", "O", "nns")],
    ),
    rule(
        [atom("sub", "S"), atom("obj", "O")],
        [atom("nsubj", "O", "S"), atom("pos_tag", "O", "cd")],
    ),
)


def complement_rules(pos):
    """Complement rules anchored at one word position.

    The preposition rule pairs an nmod (or its UD-v2 spelling, obl) with the
    dependent's case marker.
    """
    return (
        rule([atom("noun_compound", "N")], [atom("compound", pos, "N")]),
        rule([atom("adj_mod", "JJ")], [atom("amod", pos, "JJ")]),
        rule([atom("noun_conjunction", "N")], [atom("conj", pos, "N")]),
        rule(
            [atom("preposition", "COMP", "IN")],
            [atom("nmod", pos, "COMP"), atom("case", "COMP", "IN")],
        ),
        rule(
            [atom("preposition", "COMP", "IN")],
            [atom("obl", pos, "COMP"), atom("case", "COMP", "IN")],
        ),
        rule([atom("adverbial_modifier", "ADV")], [atom("advmod", pos, "ADV")]),
    )


FAMILIES = {
    "structure": lambda pos=None: STRUCTURE_RULES,
    "components": lambda pos=None: COMPONENT_RULES,
    "complements": complement_rules,
}


def derive_family(facts, family, pos=None):
    """Evaluate a named rule family ("structure", "components", "complements")."""
    if family not in FAMILIES:
        raise KeyError("unknown rule family %r" % family)
    if family == "complements" and pos is None:
        raise ValueError("the complements family needs an anchor position")
    return derive(facts, FAMILIES[family](pos))


def sentence_atoms(facts):
    """The fact atoms of a sentence: dependencies plus pos_tag atoms."""
    out = set()
    for dep in facts.deps:
        out.add(Atom(dep.relation, (dep.head, dep.dependent)))
    for tok in facts.tokens:
        out.add(Atom("pos_tag", (tok.index, tok.pos)))
    return frozenset(out)
