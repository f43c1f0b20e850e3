"""Main-component role assignment and recursive complement chunking.

The component rules map a few words onto roles (sub, verb, obj, ...) for the
selected structure; everything else hangs off those words as complements
discovered by re-running the complement rules at each new position, which
yields the maximal chunk of words supporting each main component.
"""

from dataclasses import dataclass

from . import engine
from .engine import atom

# Determiners, possessives, auxiliaries, copulas and punctuation are never
# chunk members: the complement rules only consume compound/amod/conj/
# nmod+case/advmod, and subtype labels such as nmod:poss match nothing.
ROLE_ORDER = ("sub", "verb", "verb_1", "verb_2", "obj", "adj")

COPULAR_OBJ_TAGS = {"nn", "nns", "cd"}


class UnsupportedCopularComplement(ValueError):
    """Copular head tagged outside the supported jj/nn/nns/cd set."""

    def __init__(self, pos_tag):
        self.pos_tag = pos_tag
        super().__init__("unsupported copular complement with tag %r" % pos_tag)


@dataclass(frozen=True)
class ComponentMap:
    sub: int
    verb: int = None
    obj: int = None
    verb_1: int = None
    verb_2: int = None
    adj: int = None

    def __post_init__(self):
        filled = [v for v in self.as_dict().values() if v is not None]
        if len(filled) != len(set(filled)):
            raise ValueError("component roles must map distinct tokens")

    def as_dict(self):
        return {
            role: getattr(self, role)
            for role in ROLE_ORDER
            if getattr(self, role) is not None
        }


@dataclass(frozen=True)
class ComplementAttachment:
    kind: str  # noun_compound | adj_mod | noun_conjunction | preposition | adverbial_modifier
    host: int
    dependent: int
    case_marker: int = None


@dataclass(frozen=True)
class Attachment:
    """A complement attachment carrying the recursively built sub-chunk."""

    kind: str
    chunk: "Chunk"
    case_marker: int = None


@dataclass(frozen=True)
class Chunk:
    head: int
    lemma: str
    attachments: tuple = ()

    def token_set(self):
        out = {self.head}
        for att in self.attachments:
            out |= att.chunk.token_set()
        return out

    def to_dict(self):
        return {
            "head": self.head,
            "lemma": self.lemma,
            "attachments": [
                {
                    "kind": att.kind,
                    "case_marker": att.case_marker,
                    "chunk": att.chunk.to_dict(),
                }
                for att in self.attachments
            ],
        }


def _role_bindings(facts, body, roles):
    """Solve a component rule body, returning candidate role maps."""
    sentence = engine.sentence_atoms(facts)
    out = []
    for subst in engine.bindings(sentence, body):
        out.append({role: subst[var] for role, var in roles.items()})
    return out


def _prefer_root(facts, candidates, anchor_role):
    """With coordinated clauses the one anchored at a parse root wins."""
    if not candidates:
        return None
    roots = set(facts.root_indices)
    candidates = sorted(candidates, key=lambda c: sorted(c.items()))
    for cand in candidates:
        if cand[anchor_role] in roots:
            return cand
    return candidates[0]


def main_components(facts, selected):
    """Role assignment for the selected structure.

    The copular structure resolves its trailing component by tag: jj becomes
    an adjectival predicate, nn/nns/cd a nominal one; anything else is
    rejected.
    """
    kind = selected.kind
    if kind == 1:
        cands = _role_bindings(
            facts, [atom("nsubj", "V", "S")], {"sub": "S", "verb": "V"}
        ) or _role_bindings(
            facts, [atom("nsubjpass", "V", "S")], {"sub": "S", "verb": "V"}
        )
        chosen = _prefer_root(facts, cands, "verb")
        return ComponentMap(sub=chosen["sub"], verb=chosen["verb"])
    if kind == 2:
        cands = _role_bindings(
            facts,
            [atom("nsubj", "V", "S"), atom("dobj", "V", "O")],
            {"sub": "S", "verb": "V", "obj": "O"},
        )
        chosen = _prefer_root(facts, cands, "verb")
        return ComponentMap(sub=chosen["sub"], verb=chosen["verb"], obj=chosen["obj"])
    if kind == 3:
        cands = _role_bindings(
            facts,
            [atom("nsubj", "V1", "S"), atom("xcomp", "V1", "V2"), atom("dobj", "V2", "O")],
            {"sub": "S", "verb_1": "V1", "verb_2": "V2", "obj": "O"},
        )
        chosen = _prefer_root(facts, cands, "verb_1")
        return ComponentMap(
            sub=chosen["sub"],
            verb_1=chosen["verb_1"],
            verb_2=chosen["verb_2"],
            obj=chosen["obj"],
        )
    if kind == 4:
        cands = _role_bindings(
            facts,
            [atom("nsubj", "O", "S"), atom("cop", "O", "TOBE")],
            {"sub": "S", "obj": "O"},
        )
        chosen = _prefer_root(facts, cands, "obj")
        head_tag = facts.pos(chosen["obj"])
        if head_tag == "jj":
            return ComponentMap(sub=chosen["sub"], adj=chosen["obj"])
        if head_tag in COPULAR_OBJ_TAGS:
            return ComponentMap(sub=chosen["sub"], obj=chosen["obj"])
        raise UnsupportedCopularComplement(head_tag)
    if kind == 5:
        cands = _role_bindings(
            facts,
            [atom("nsubjpass", "V", "S"), atom("auxpass", "V", "TOBE")],
            {"sub": "S", "verb": "V"},
        )
        chosen = _prefer_root(facts, cands, "verb")
        return ComponentMap(sub=chosen["sub"], verb=chosen["verb"])
    raise ValueError("unknown structure kind %d" % kind)


def complements(facts, pos):
    """All complement attachments anchored at one token, in dependent order."""
    model = engine.derive_family(engine.sentence_atoms(facts), "complements", pos=pos)
    out = []
    for a in sorted(model.derived, key=lambda a: (a.args[0], a.predicate)):
        if a.predicate == "preposition":
            out.append(
                ComplementAttachment(
                    kind="preposition", host=pos, dependent=a.args[0], case_marker=a.args[1]
                )
            )
        elif a.predicate in (
            "noun_compound",
            "adj_mod",
            "noun_conjunction",
            "adverbial_modifier",
        ):
            out.append(
                ComplementAttachment(kind=a.predicate, host=pos, dependent=a.args[0])
            )
    return sorted(out, key=lambda att: att.dependent)


def build_chunk(facts, head, _visited=None):
    """Recursive closure of complement discovery below one head token.

    Determiners, possessive pronouns, auxiliaries, copulas and punctuation are
    never chunk members; the visited set guards against malformed input.
    """
    visited = set() if _visited is None else _visited
    visited.add(head)
    attachments = []
    for att in complements(facts, head):
        if att.dependent in visited:
            continue
        sub = build_chunk(facts, att.dependent, visited)
        attachments.append(
            Attachment(kind=att.kind, chunk=sub, case_marker=att.case_marker)
        )
    return Chunk(head=head, lemma=facts.token(head).lemma, attachments=tuple(attachments))


def conjunction_word(facts, host, dependent):
    """The coordinator for a conjunction attachment ("and" unless cc says else)."""
    for cc_host in (dependent, host):
        for dep in facts.deps_with_head(cc_host):
            if dep.relation == "cc":
                return facts.token(dep.dependent).lemma.lower()
    return "and"
