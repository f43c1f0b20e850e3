"""GF grammar encoding: one grammar fragment per recognized sentence.

Each main component becomes a zero-argument abstract function (named by its
capitalized head lemma) over a category mirroring its concrete type, and the
sentence itself becomes a zero-argument Message function whose linearization
applies the structure's clause skeleton to the component functions.  Chunks
are folded into constructor expressions with the extended rule set: compounds
into multiword nouns, adjective modifiers into common-noun layers, preposition
attachments into NP-modifying adverbs, conjunctions into NP lists.

Number (for bare mkNP nodes) and observed verb forms ride along as metadata
on the expression nodes; they guide the built-in realizer and are invisible
in rendered grammar text.
"""

import re
from dataclasses import dataclass, field

from . import morph
from .components import build_chunk, main_components, conjunction_word
from .structure import recognize, select

NOMINAL_TAGS = {"nn", "nns", "nnp", "nnps", "cd", "prp", "wp"}
PLURAL_TAGS = {"nns", "nnps"}
PROPER_TAGS = {"nnp", "nnps", "prp", "wp"}

SLOT_PATTERN = re.compile(r"^\$(\d+)$")


class CategoryError(ValueError):
    """A chunk head whose tag does not fit the required category."""


class NotEncodable(ValueError):
    """The sentence has no recognized structure to encode."""


# --- constructor expressions -------------------------------------------------


@dataclass(frozen=True)
class App:
    fn: str
    args: tuple
    num: str = None  # "sg" | "pl" on NP-building nodes
    forms: tuple = ()  # observed inflections, e.g. (("part", "made"),)


@dataclass(frozen=True)
class Ref:
    name: str
    kind: str  # "oper" | "fun" | "arg"


@dataclass(frozen=True)
class Lit:
    text: str


def app(fn, *args, num=None, forms=()):
    return App(fn=fn, args=tuple(args), num=num, forms=tuple(forms))


def oper_ref(name):
    return Ref(name, "oper")


def fun_ref(name):
    return Ref(name, "fun")


def arg_ref(name):
    return Ref(name, "arg")


@dataclass(frozen=True)
class GfOper:
    name: str
    category: str
    definition: App


@dataclass(frozen=True)
class GfFunction:
    name: str
    arg_names: tuple
    arg_cats: tuple
    result: str
    lin: object


@dataclass
class SentenceGrammar:
    sentence_id: str
    source_text: str = ""
    categories: set = field(default_factory=lambda: {"Message"})
    lincats: dict = field(default_factory=lambda: {"Message": "Cl"})
    functions: list = field(default_factory=list)
    opers: dict = field(default_factory=dict)

    def add_oper(self, oper):
        existing = self.opers.get(oper.name)
        if existing is not None and existing != oper:
            raise ValueError("conflicting definitions for oper %s" % oper.name)
        self.opers[oper.name] = oper

    def add_function(self, fun):
        self.functions.append(fun)
        self.categories.add(fun.result)
        for cat in fun.arg_cats:
            self.categories.add(cat)
            self.lincats.setdefault(cat, cat)
        self.lincats.setdefault(fun.result, "Cl" if fun.result == "Message" else fun.result)


# --- constructor signature table ---------------------------------------------

STR = "Str"

SIGNATURES = {
    "mkCl": [(("NP", "VP"), "Cl"), (("NP", "AP"), "Cl"), (("NP", "NP"), "Cl")],
    "mkVP": [
        (("V2", "NP"), "VP"),
        (("V",), "VP"),
        (("VV", "VP"), "VP"),
        (("VP", "Adv"), "VP"),
    ],
    "passiveVP": [(("V2",), "VP")],
    "mkNP": [
        (("N",), "NP"),
        (("CN",), "NP"),
        (("NP", "Adv"), "NP"),
        (("Conj", "ListNP"), "NP"),
    ],
    "mkCN": [(("N",), "CN"), (("AP", "N"), "CN"), (("AP", "CN"), "CN")],
    "mkAP": [(("A",), "AP"), (("AdA", "AP"), "AP")],
    "mkAdv": [((STR,), "Adv"), (("Prep", "NP"), "Adv")],
    "ConstructorsEng.mkAdv": [(("Prep", "NP"), "Adv")],
    "mkListNP": [(("NP", "NP"), "ListNP"), (("NP", "ListNP"), "ListNP")],
    "mkN": [((STR,), "N"), ((STR, STR), "N")],
    "mkA": [((STR,), "A")],
    "mkV": [((STR,), "V")],
    "mkV2": [((STR,), "V2")],
    "mkVV": [((STR,), "VV")],
    "mkAdA": [((STR,), "AdA")],
    "mkPrep": [((STR,), "Prep")],
    "mkConj": [((STR,), "Conj")],
}

AMBIENT_SUFFIX_CATS = {"Prep": "Prep", "Conj": "Conj"}


def ambient_category(name):
    """Library-provided opers we reference but never define (with_Prep, and_Conj)."""
    for suffix, cat in AMBIENT_SUFFIX_CATS.items():
        if name.endswith("_" + suffix):
            return cat
    return None


class GfTypeError(TypeError):
    pass


def infer_category(expr, opers=None, funs=None, args=None):
    """Category of a constructor expression; raises GfTypeError on mismatch."""
    opers = opers or {}
    funs = funs or {}
    args = args or {}
    if isinstance(expr, Lit):
        return STR
    if isinstance(expr, Ref):
        if expr.kind == "arg":
            if expr.name not in args:
                raise GfTypeError("unbound argument %s" % expr.name)
            return args[expr.name]
        if expr.kind == "oper":
            if expr.name in opers:
                return opers[expr.name].category
            cat = ambient_category(expr.name)
            if cat is None:
                raise GfTypeError("dangling oper reference %s" % expr.name)
            return cat
        if expr.name not in funs:
            raise GfTypeError("dangling function reference %s" % expr.name)
        return funs[expr.name]
    if isinstance(expr, App):
        if expr.fn not in SIGNATURES:
            raise GfTypeError("unknown constructor %s" % expr.fn)
        got = tuple(infer_category(a, opers, funs, args) for a in expr.args)
        for inputs, output in SIGNATURES[expr.fn]:
            if inputs == got:
                return output
        raise GfTypeError("no signature of %s accepts %s" % (expr.fn, got))
    raise GfTypeError("not an expression: %r" % (expr,))


def expr_opers(expr):
    """All oper names referenced by an expression."""
    if isinstance(expr, Ref) and expr.kind == "oper":
        return {expr.name}
    if isinstance(expr, App):
        out = set()
        for a in expr.args:
            out |= expr_opers(a)
        return out
    return set()


def expr_has_args(expr):
    if isinstance(expr, Ref):
        return expr.kind == "arg"
    if isinstance(expr, App):
        return any(expr_has_args(a) for a in expr.args)
    return False


# --- identifier and lexeme helpers -------------------------------------------


def sanitize_ident(text):
    ident = re.sub(r"[^a-z0-9]+", "_", text.lower()).strip("_")
    if not ident:
        ident = "x"
    if ident[0].isdigit():
        ident = "n" + ident
    return ident


def slot_number(token):
    m = SLOT_PATTERN.match(token.surface)
    return int(m.group(1)) if m else None


def _noun_words(facts, chunk):
    """Lemma sequence of a noun chunk's compound run, head last."""
    words = []
    for att in chunk.attachments:
        if att.kind == "noun_compound":
            words.extend(_noun_words(facts, att.chunk))
    tok = facts.token(chunk.head)
    words.append(tok.surface if tok.pos in PROPER_TAGS else tok.lemma)
    return words


def _noun_oper(facts, chunk, grammar):
    tok = facts.token(chunk.head)
    words = _noun_words(facts, chunk)
    singular = " ".join(words)
    if tok.pos in PROPER_TAGS:
        plural = singular
    elif tok.pos in PLURAL_TAGS:
        plural = " ".join(words[:-1] + [tok.surface])
    else:
        plural = morph.pluralize_noun(singular)
    name = sanitize_ident("_".join(words)) + "_N"
    grammar.add_oper(GfOper(name, "N", app("mkN", Lit(singular), Lit(plural))))
    return name, words


def _verb_forms(token, lemma):
    forms = []
    if token.pos == "vbz" and token.surface.lower() != morph.inflect_verb_3sg(lemma):
        forms.append(("third", token.surface.lower()))
    if token.pos == "vbn" and token.surface.lower() != morph.past_participle(lemma):
        forms.append(("part", token.surface.lower()))
    return tuple(forms)


def _verb_oper(facts, index, cat, grammar):
    tok = facts.token(index)
    lemma = tok.lemma.lower()
    name = sanitize_ident(lemma) + "_" + cat
    definition = app("mk" + cat, Lit(lemma), forms=_verb_forms(tok, lemma))
    grammar.add_oper(GfOper(name, cat, definition))
    return name


# --- chunk encoding -----------------------------------------------------------


def encode_ap(facts, chunk, grammar, materialize=True):
    """AP expression for an adjective chunk.

    Inside a common noun the layers are materialized as opers (the paper's
    popular_AP style); as a bare copular predicate the mkAP stays inline.
    """
    tok = facts.token(chunk.head)
    if tok.pos not in ("jj", "jjr", "jjs", "vbn", "vbg"):
        raise CategoryError("token %d (%s) is not adjectival" % (chunk.head, tok.surface))
    # participial adjectives keep their surface form ("consumed", not "consume")
    word = tok.surface.lower() if tok.pos in ("vbn", "vbg") else tok.lemma
    a_name = sanitize_ident(word) + "_A"
    grammar.add_oper(GfOper(a_name, "A", app("mkA", Lit(word))))
    name_parts = [sanitize_ident(word)]
    if materialize:
        ap_name = name_parts[0] + "_AP"
        grammar.add_oper(GfOper(ap_name, "AP", app("mkAP", oper_ref(a_name))))
        expr = oper_ref(ap_name)
    else:
        expr = app("mkAP", oper_ref(a_name))
    for att in chunk.attachments:
        if att.kind != "adverbial_modifier":
            continue  # no extended rule consumes other adjective complements
        ada_tok = facts.token(att.chunk.head)
        ada_name = sanitize_ident(ada_tok.lemma) + "_AdA"
        grammar.add_oper(GfOper(ada_name, "AdA", app("mkAdA", Lit(ada_tok.lemma))))
        name_parts.insert(0, sanitize_ident(ada_tok.lemma))
        if materialize:
            wrapped = "_".join(name_parts) + "_AP"
            grammar.add_oper(GfOper(wrapped, "AP", app("mkAP", oper_ref(ada_name), expr)))
            expr = oper_ref(wrapped)
        else:
            expr = app("mkAP", oper_ref(ada_name), expr)
    return expr, "_".join(name_parts)


def encode_np(facts, chunk, grammar):
    """NP expression for a nominal chunk, emitting the opers it needs.

    Build order: compounds fold into a multiword noun, adjectives stack into
    common-noun layers, the result lifts to NP, preposition attachments wrap
    as NP-modifying adverbs, and conjunction attachments close the list.
    """
    tok = facts.token(chunk.head)
    slot = slot_number(tok)
    if slot is not None:
        return arg_ref("a%d" % slot)
    if tok.pos not in NOMINAL_TAGS:
        raise CategoryError(
            "token %d (%s/%s) cannot head a noun phrase" % (chunk.head, tok.surface, tok.pos)
        )
    number = "pl" if tok.pos in PLURAL_TAGS else "sg"
    n_name, words = _noun_oper(facts, chunk, grammar)
    adjectives = [a for a in chunk.attachments if a.kind == "adj_mod"]
    if adjectives:
        cn_names = [sanitize_ident(w) for w in words]
        inner = oper_ref(n_name)
        inner_cat = "N"
        for att in reversed(adjectives):
            ap_expr, ap_ident = encode_ap(facts, att.chunk, grammar, materialize=True)
            cn_names = ap_ident.split("_") + cn_names
            cn_name = "_".join(cn_names) + "_CN"
            grammar.add_oper(GfOper(cn_name, "CN", app("mkCN", ap_expr, inner)))
            inner = oper_ref(cn_name)
            inner_cat = "CN"
        np = app("mkNP", inner, num=number)
    else:
        np = app("mkNP", oper_ref(n_name), num=number)
    for att in chunk.attachments:
        if att.kind != "preposition":
            continue
        prep_word = facts.token(att.case_marker).lemma.lower()
        prep = oper_ref(sanitize_ident(prep_word) + "_Prep")
        np = app("mkNP", np, app("ConstructorsEng.mkAdv", prep, encode_np(facts, att.chunk, grammar)))
    conjuncts = [a for a in chunk.attachments if a.kind == "noun_conjunction"]
    if conjuncts:
        items = [encode_np(facts, att.chunk, grammar) for att in conjuncts] + [np]
        lst = app("mkListNP", items[-2], items[-1])
        for item in reversed(items[:-2]):
            lst = app("mkListNP", item, lst)
        word = conjunction_word(facts, chunk.head, conjuncts[0].chunk.head)
        np = app("mkNP", oper_ref(sanitize_ident(word) + "_Conj"), lst, num="pl")
    return np


def _vp_wraps(facts, chunk, vp, grammar):
    """Adverbial complements of a verb wrap the VP, in dependent order."""
    for att in chunk.attachments:
        if att.kind == "adverbial_modifier":
            adv_tok = facts.token(att.chunk.head)
            adv_name = sanitize_ident(adv_tok.lemma) + "_Adv"
            grammar.add_oper(GfOper(adv_name, "Adv", app("mkAdv", Lit(adv_tok.lemma))))
            vp = app("mkVP", vp, oper_ref(adv_name))
        elif att.kind == "preposition":
            prep_word = facts.token(att.case_marker).lemma.lower()
            prep = oper_ref(sanitize_ident(prep_word) + "_Prep")
            vp = app(
                "mkVP", vp, app("ConstructorsEng.mkAdv", prep, encode_np(facts, att.chunk, grammar))
            )
    return vp


def encode_vp(facts, selected, roles, refs, grammar):
    """VP expression of the clause skeleton for the selected structure."""
    kind = selected.kind
    if kind == 1:
        vp = app("mkVP", refs["verb"])
        return _vp_wraps(facts, build_chunk(facts, roles.verb), vp, grammar)
    if kind == 2:
        vp = app("mkVP", refs["verb"], refs["obj"])
        return _vp_wraps(facts, build_chunk(facts, roles.verb), vp, grammar)
    if kind == 3:
        inner = app("mkVP", refs["verb_2"], refs["obj"])
        inner = _vp_wraps(facts, build_chunk(facts, roles.verb_2), inner, grammar)
        vp = app("mkVP", refs["verb_1"], inner)
        return _vp_wraps(facts, build_chunk(facts, roles.verb_1), vp, grammar)
    if kind == 5:
        vp = app("passiveVP", refs["verb"])
        return _vp_wraps(facts, build_chunk(facts, roles.verb), vp, grammar)
    raise ValueError("structure kind %d has no verb phrase" % kind)


# --- sentence encoding ---------------------------------------------------------

VERB_CATS = {1: "V", 2: "V2", 3: ("VV", "V2"), 5: "V2"}


def _component_fun_name(base, used):
    name = base[:1].upper() + base[1:]
    if name not in used:
        used.add(name)
        return name
    n = 2
    while "%s_%d" % (name, n) in used:
        n += 1
    final = "%s_%d" % (name, n)
    used.add(final)
    return final


def _nominal_fun(facts, index, grammar, used):
    chunk = build_chunk(facts, index)
    expr = encode_np(facts, chunk, grammar)
    if expr_has_args(expr):
        return expr  # slot-bearing components inline into the sentence function
    name = _component_fun_name(sanitize_ident(facts.token(index).lemma), used)
    grammar.add_function(GfFunction(name, (), (), "NP", expr))
    return fun_ref(name)


def encode_sentence(facts, selected, roles, slots=()):
    """Grammar fragment for one sentence given its structure and roles.

    ``slots`` declares argument positions (template synthesis); plain corpus
    sentences leave it empty and get a closed zero-argument Message function.
    """
    grammar = SentenceGrammar(sentence_id=facts.sentence_id, source_text=facts.source_text)
    used = set()
    refs = {}

    refs["sub"] = _nominal_fun(facts, roles.sub, grammar, used)
    if roles.obj is not None:
        refs["obj"] = _nominal_fun(facts, roles.obj, grammar, used)
    if roles.adj is not None:
        adj_chunk = build_chunk(facts, roles.adj)
        expr, _ = encode_ap(facts, adj_chunk, grammar, materialize=False)
        name = _component_fun_name(sanitize_ident(facts.token(roles.adj).lemma), used)
        grammar.add_function(GfFunction(name, (), (), "AP", expr))
        refs["adj"] = fun_ref(name)
    kind = selected.kind
    if kind == 3:
        for role, cat in (("verb_1", "VV"), ("verb_2", "V2")):
            index = getattr(roles, role)
            oper_name = _verb_oper(facts, index, cat, grammar)
            name = _component_fun_name(sanitize_ident(facts.token(index).lemma), used)
            grammar.add_function(GfFunction(name, (), (), cat, oper_ref(oper_name)))
            refs[role] = fun_ref(name)
    elif roles.verb is not None:
        cat = VERB_CATS[kind]
        oper_name = _verb_oper(facts, roles.verb, cat, grammar)
        name = _component_fun_name(sanitize_ident(facts.token(roles.verb).lemma), used)
        grammar.add_function(GfFunction(name, (), (), cat, oper_ref(oper_name)))
        refs["verb"] = fun_ref(name)

    if kind == 4:
        predicate = refs["adj"] if roles.adj is not None else refs["obj"]
        clause = app("mkCl", refs["sub"], predicate)
    else:
        clause = app("mkCl", refs["sub"], encode_vp(facts, selected, roles, refs, grammar))

    arg_names = tuple("a%d" % n for n in slots)
    sent_fun = GfFunction(
        name="sent_" + sanitize_ident(facts.sentence_id),
        arg_names=arg_names,
        arg_cats=tuple("NP" for _ in slots),
        result="Message",
        lin=clause,
    )
    grammar.add_function(sent_fun)
    return grammar


def top_rule(selected, copular_role="obj"):
    """Clause skeleton assigned to a structure, as a category tree."""
    kind = selected.kind
    skeletons = {
        1: ("mkCl", "NP", ("mkVP", "V")),
        2: ("mkCl", "NP", ("mkVP", "V2", "NP")),
        3: ("mkCl", "NP", ("mkVP", "VV", ("mkVP", "V2", "NP"))),
        5: ("mkCl", "NP", ("passiveVP", "V2")),
    }
    if kind == 4:
        return ("mkCl", "NP", "AP" if copular_role == "adj" else "NP")
    return skeletons[kind]


def sentence_slots(facts):
    """Argument slot numbers ($1..$n) appearing in a sentence, numerically ordered."""
    slots = set()
    for tok in facts.tokens:
        n = slot_number(tok)
        if n is not None:
            slots.add(n)
    return tuple(sorted(slots))


def synthesize_sentence(facts):
    """Full pipeline for one sentence; None when the structure is unrecognized."""
    selected = select(recognize(facts))
    if selected is None:
        return None
    roles = main_components(facts, selected)
    return encode_sentence(facts, selected, roles, slots=sentence_slots(facts))


# --- fragment (de)serialization -------------------------------------------------


def expr_to_dict(expr):
    if isinstance(expr, Lit):
        return {"str": expr.text}
    if isinstance(expr, Ref):
        return {"ref": expr.name, "kind": expr.kind}
    d = {"app": expr.fn, "args": [expr_to_dict(a) for a in expr.args]}
    if expr.num:
        d["num"] = expr.num
    if expr.forms:
        d["forms"] = {k: v for k, v in expr.forms}
    return d


def expr_from_dict(d):
    if "str" in d:
        return Lit(d["str"])
    if "ref" in d:
        return Ref(d["ref"], d["kind"])
    return App(
        fn=d["app"],
        args=tuple(expr_from_dict(a) for a in d["args"]),
        num=d.get("num"),
        forms=tuple(sorted(d.get("forms", {}).items())),
    )


def fragment_to_dict(grammar):
    return {
        "sentence_id": grammar.sentence_id,
        "source_text": grammar.source_text,
        "categories": sorted(grammar.categories),
        "lincats": dict(sorted(grammar.lincats.items())),
        "functions": [
            {
                "name": f.name,
                "args": [
                    {"name": n, "cat": c} for n, c in zip(f.arg_names, f.arg_cats)
                ],
                "result": f.result,
                "lin": expr_to_dict(f.lin),
            }
            for f in grammar.functions
        ],
        "opers": [
            {
                "name": o.name,
                "category": o.category,
                "definition": expr_to_dict(o.definition),
            }
            for o in sorted(grammar.opers.values(), key=lambda o: o.name)
        ],
    }


def fragment_from_dict(d):
    grammar = SentenceGrammar(
        sentence_id=d["sentence_id"], source_text=d.get("source_text", "")
    )
    grammar.categories = set(d["categories"])
    grammar.lincats = dict(d["lincats"])
    for f in d["functions"]:
        grammar.functions.append(
            GfFunction(
                name=f["name"],
                arg_names=tuple(a["name"] for a in f["args"]),
                arg_cats=tuple(a["cat"] for a in f["args"]),
                result=f["result"],
                lin=expr_from_dict(f["lin"]),
            )
        )
    for o in d["opers"]:
        grammar.opers[o["name"]] = GfOper(
            name=o["name"], category=o["category"], definition=expr_from_dict(o["definition"])
        )
    return grammar
