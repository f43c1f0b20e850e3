"""CoNLL-U ingestion: turn each parsed sentence into a program of facts.

Every sentence becomes a set of dependency facts ``rel(head, dependent)``
plus one ``pos_tag(index, tag)`` fact per token.  The root edge is dropped;
multiword-token ranges ("3-4") and empty nodes ("3.1") are skipped.
"""

from dataclasses import dataclass, field

from . import morph

# Penn tags are preferred (the component rules test them); when only UPOS is
# available we map the tags the rules care about and lowercase the rest.
UPOS_FALLBACK = {
    "NOUN": "nn",
    "PROPN": "nnp",
    "ADJ": "jj",
    "NUM": "cd",
    "VERB": "vbp",
    "PUNCT": "punct",
}

# UD v2 renamed a few labels; normalize to the v1 names the rules use.
DEPREL_ALIASES = {
    "obj": "dobj",
    "nsubj:pass": "nsubjpass",
    "aux:pass": "auxpass",
}


class ConlluError(ValueError):
    """Malformed CoNLL-U input."""


class StructureError(ValueError):
    """A sentence whose dependency facts do not form a forest."""


@dataclass(frozen=True)
class Token:
    index: int
    surface: str
    lemma: str
    pos: str  # lowercased Penn tag ("vbp", "nn", "punct", ...)

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("token index must be >= 1")
        if not self.pos or any(c.isspace() for c in self.pos):
            raise ValueError("pos must be a non-empty tag without whitespace")


@dataclass(frozen=True, order=True)
class DependencyFact:
    relation: str
    head: int
    dependent: int


@dataclass(frozen=True)
class SentenceFacts:
    sentence_id: str
    tokens: tuple
    deps: frozenset
    source_text: str = ""
    _by_index: dict = field(init=False, repr=False, compare=False, hash=False, default=None)

    def __post_init__(self):
        indices = [t.index for t in self.tokens]
        if indices != list(range(1, len(indices) + 1)):
            raise StructureError(
                "sentence %r: token indices must be consecutive from 1" % self.sentence_id
            )
        object.__setattr__(self, "_by_index", {t.index: t for t in self.tokens})
        self._check_forest()

    def _check_forest(self):
        parent = {}
        for dep in self.deps:
            if dep.head not in self._by_index or dep.dependent not in self._by_index:
                raise StructureError(
                    "sentence %r: dependency %s points outside the sentence"
                    % (self.sentence_id, dep)
                )
            # a token may carry several incoming labels only in malformed input
            parent.setdefault(dep.dependent, dep.head)
        for start in parent:
            seen = set()
            node = start
            while node in parent:
                if node in seen:
                    raise StructureError(
                        "sentence %r: cyclic dependency heads" % self.sentence_id
                    )
                seen.add(node)
                node = parent[node]

    def token(self, index):
        return self._by_index[index]

    def pos(self, index):
        return self._by_index[index].pos

    def deps_with_head(self, head):
        """Dependency facts headed at the given token, in dependent order."""
        return sorted(
            (d for d in self.deps if d.head == head), key=lambda d: d.dependent
        )

    def deps_with_relation(self, relation):
        return sorted(d for d in self.deps if d.relation == relation)

    @property
    def root_indices(self):
        """Tokens that head something but depend on nothing (forest roots)."""
        dependents = {d.dependent for d in self.deps}
        heads = {d.head for d in self.deps}
        return sorted(heads - dependents)


def _normalize_pos(xpos, upos):
    if upos == "PUNCT":
        return "punct"
    if xpos and xpos != "_":
        tag = xpos.lower()
        if not tag[0].isalnum():
            return "punct"
        return tag
    if upos in UPOS_FALLBACK:
        return UPOS_FALLBACK[upos]
    if upos and upos != "_":
        return upos.lower()
    raise ConlluError("token with neither XPOS nor UPOS")


def _fallback_lemma(surface, pos):
    if pos == "nns":
        return morph.noun_lemma_from_plural(surface)
    if pos == "vbz":
        return morph.verb_lemma_from_3sg(surface)
    return surface


def parse_conllu(text, default_id_prefix="s"):
    """Parse CoNLL-U text into a list of SentenceFacts.

    Sentences are blank-line separated blocks of 10-column rows.  ``# sent_id``
    and ``# text`` comments are honored when present.
    """
    sentences = []
    block_lines = []
    block_start = 1
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if line.strip() == "":
            if block_lines:
                sentences.append(
                    _parse_block(block_lines, block_start, len(sentences), default_id_prefix)
                )
                block_lines = []
        else:
            if not block_lines:
                block_start = lineno
            block_lines.append((lineno, line))
    if block_lines:
        sentences.append(
            _parse_block(block_lines, block_start, len(sentences), default_id_prefix)
        )
    return sentences


def parse_conllu_file(path):
    with open(path, encoding="utf-8") as fh:
        return parse_conllu(fh.read())


def _parse_block(lines, block_start, ordinal, default_id_prefix):
    sent_id = None
    source_text = ""
    tokens = []
    deps = []
    heads = {}
    for lineno, line in lines:
        if line.startswith("#"):
            comment = line[1:].strip()
            if "=" in comment:
                key, value = comment.split("=", 1)
                key = key.strip()
                if key == "sent_id":
                    sent_id = value.strip()
                elif key == "text":
                    source_text = value.strip()
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise ConlluError(
                "line %d: expected 10 tab-separated columns, got %d" % (lineno, len(cols))
            )
        tok_id = cols[0]
        if "-" in tok_id or "." in tok_id:
            continue  # multiword range / empty node
        try:
            index = int(tok_id)
        except ValueError:
            raise ConlluError("line %d: non-integer token index %r" % (lineno, tok_id))
        pos = _normalize_pos(cols[4], cols[3])
        lemma = cols[2] if cols[2] not in ("", "_") else _fallback_lemma(cols[1], pos)
        tokens.append(Token(index=index, surface=cols[1], lemma=lemma, pos=pos))
        if cols[6] in ("", "_"):
            continue
        try:
            head = int(cols[6])
        except ValueError:
            raise ConlluError("line %d: non-integer head %r" % (lineno, cols[6]))
        deprel = cols[7]
        deprel = DEPREL_ALIASES.get(deprel, deprel)
        if head == 0 or deprel.lower() == "root":
            continue  # the root edge carries no fact
        heads[index] = (deprel, head)
    for index, (deprel, head) in heads.items():
        deps.append(DependencyFact(relation=deprel, head=head, dependent=index))
    if sent_id is None:
        sent_id = "%s%d" % (default_id_prefix, ordinal + 1)
    return SentenceFacts(
        sentence_id=sent_id,
        tokens=tuple(tokens),
        deps=frozenset(deps),
        source_text=source_text,
    )


def _fact_predicate(relation):
    # subtype separators are not valid in fact syntax
    return relation.replace(":", "_")


def facts_to_text(facts):
    """Render a sentence's facts as a deterministic one-fact-per-line program.

    Dependency facts come first in dependent order, then pos_tag facts in
    token order; every fact ends with "." and a newline.
    """
    out = []
    for dep in sorted(facts.deps, key=lambda d: (d.dependent, d.relation, d.head)):
        out.append("%s(%d,%d)." % (_fact_predicate(dep.relation), dep.head, dep.dependent))
    for tok in facts.tokens:
        out.append("pos_tag(%d,%s)." % (tok.index, tok.pos))
    return "".join(line + "\n" for line in out)
