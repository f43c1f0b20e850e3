"""Merge per-sentence grammar fragments and render GF source files.

Merging is a set union of categories, lincats, functions and opers.  Name
collisions with identical definitions collapse to one entry; collisions with
different definitions are renamed with a numeric suffix chosen from the
canonical ordering of the definitions themselves, so the result does not
depend on fragment order.
"""

from dataclasses import dataclass, field

from .encoder import App, GfFunction, GfOper, Lit, Ref, SentenceGrammar


@dataclass
class GfGrammar:
    start_category: str = "Message"
    categories: set = field(default_factory=lambda: {"Message"})
    lincats: dict = field(default_factory=lambda: {"Message": "Cl"})
    functions: list = field(default_factory=list)  # (sentence_id, intra_index, GfFunction)
    opers: dict = field(default_factory=dict)

    def function(self, name):
        for _, _, fun in self.functions:
            if fun.name == name:
                return fun
        raise KeyError("no function %r in grammar" % name)

    def function_names(self):
        return [fun.name for _, _, fun in self.functions]


def render_expr(expr, parenthesized=False):
    """Render a constructor expression the way the emitted listings spell it.

    Inside parentheses a final bare oper reference keeps a trailing space;
    argument and function references do not.
    """
    if isinstance(expr, Lit):
        return '"%s"' % expr.text
    if isinstance(expr, Ref):
        return expr.name
    parts = [expr.fn]
    for a in expr.args:
        if isinstance(a, App):
            parts.append("(" + render_expr(a, parenthesized=True) + ")")
        else:
            parts.append(render_expr(a))
    text = " ".join(parts)
    if parenthesized and expr.args:
        last = expr.args[-1]
        if isinstance(last, Ref) and last.kind == "oper":
            text += " "
    return text


def _rename_expr(expr, oper_map, fun_map):
    if isinstance(expr, Ref):
        if expr.kind == "oper" and expr.name in oper_map:
            return Ref(oper_map[expr.name], "oper")
        if expr.kind == "fun" and expr.name in fun_map:
            return Ref(fun_map[expr.name], "fun")
        return expr
    if isinstance(expr, App):
        return App(
            fn=expr.fn,
            args=tuple(_rename_expr(a, oper_map, fun_map) for a in expr.args),
            num=expr.num,
            forms=expr.forms,
        )
    return expr


def _suffixed_oper_name(name, n):
    # keep the category suffix last: popular_A -> popular_2_A
    base, _, cat = name.rpartition("_")
    if base:
        return "%s_%d_%s" % (base, n, cat)
    return "%s_%d" % (name, n)


def _fragments(sources):
    """Normalize merge inputs to (sentence_id, functions, opers) triples."""
    out = []
    for src in sources:
        if isinstance(src, SentenceGrammar):
            out.append(
                (
                    [(src.sentence_id, i, f) for i, f in enumerate(src.functions)],
                    dict(src.opers),
                    set(src.categories),
                    dict(src.lincats),
                )
            )
        elif isinstance(src, GfGrammar):
            out.append(
                (list(src.functions), dict(src.opers), set(src.categories), dict(src.lincats))
            )
        else:
            raise TypeError("cannot merge %r" % (src,))
    return out


def _merge_forms(defs):
    """Union the observed-form metadata of render-identical definitions."""
    merged = {}
    for d in defs:
        for key, value in d.forms:
            merged.setdefault(key, []).append(value)
    return tuple(sorted((k, sorted(vs)[0]) for k, vs in merged.items()))


def merge(sources):
    """Union of grammar fragments into one well-formed grammar."""
    fragments = _fragments(sources)

    # global, order-independent rename plan for colliding oper definitions;
    # suffixed names must also dodge every name already in use
    oper_defs = {}
    for _, opers, _, _ in fragments:
        for oper in opers.values():
            oper_defs.setdefault(oper.name, {})[render_expr(oper.definition)] = None
    oper_final = {}
    taken_opers = set(oper_defs)
    for name in sorted(oper_defs):
        for i, rendered in enumerate(sorted(oper_defs[name])):
            if i == 0:
                final = name
            else:
                n = 2
                while _suffixed_oper_name(name, n) in taken_opers:
                    n += 1
                final = _suffixed_oper_name(name, n)
                taken_opers.add(final)
            oper_final[(name, rendered)] = final

    merged = GfGrammar()
    final_opers = {}
    fun_defs = {}
    staged = []
    for functions, opers, categories, lincats in fragments:
        merged.categories |= categories
        for cat, lin in lincats.items():
            if merged.lincats.setdefault(cat, lin) != lin:
                raise ValueError("conflicting lincat for %s" % cat)
        local_opers = {}
        for oper in opers.values():
            final = oper_final[(oper.name, render_expr(oper.definition))]
            local_opers[oper.name] = final
            final_opers.setdefault(final, []).append(oper)
        renamed = []
        for sid, intra, fun in functions:
            lin = _rename_expr(fun.lin, local_opers, {})
            renamed.append((sid, intra, fun, lin))
            key = (fun.name, fun.arg_cats, fun.result, render_expr(lin))
            fun_defs.setdefault(fun.name, {})[key[1:]] = None
        staged.append((renamed, local_opers))

    fun_final = {}
    taken_funs = set(fun_defs)
    for name in sorted(fun_defs):
        for i, key in enumerate(sorted(fun_defs[name], key=repr)):
            if i == 0:
                final = name
            else:
                n = 2
                while "%s_%d" % (name, n) in taken_funs:
                    n += 1
                final = "%s_%d" % (name, n)
                taken_funs.add(final)
            fun_final[(name,) + key] = final

    # identical functions collapse to one entry tagged with the least
    # (sentence id, position), so fragment order cannot leak into the result
    collapsed = {}
    for renamed, _ in staged:
        local_funs = {
            fun.name: fun_final[(fun.name, fun.arg_cats, fun.result, render_expr(lin))]
            for _, _, fun, lin in renamed
        }
        for sid, intra, fun, lin in renamed:
            final_name = local_funs[fun.name]
            final_lin = _rename_expr(lin, {}, local_funs)
            key = (final_name, render_expr(final_lin))
            entry = (
                str(sid),
                intra,
                GfFunction(
                    name=final_name,
                    arg_names=fun.arg_names,
                    arg_cats=fun.arg_cats,
                    result=fun.result,
                    lin=final_lin,
                ),
            )
            if key not in collapsed or entry[:2] < collapsed[key][:2]:
                collapsed[key] = entry
    merged.functions.extend(collapsed.values())

    for final, variants in final_opers.items():
        first = variants[0]
        merged.opers[final] = GfOper(
            name=final,
            category=first.category,
            definition=App(
                fn=first.definition.fn,
                args=first.definition.args,
                num=first.definition.num,
                forms=_merge_forms([v.definition for v in variants]),
            ),
        )

    merged.functions.sort(key=lambda item: (str(item[0]), item[1], item[2].name))
    return merged


def _fun_signature(fun):
    cats = list(fun.arg_cats) + [fun.result]
    return " -> ".join(cats)


def render(grammar, name):
    """Render (abstract, concrete-English) GF sources with canonical ordering."""
    abstract = []
    abstract.append("abstract %s = {" % name)
    abstract.append("  flags startcat = %s ;" % grammar.start_category)
    abstract.append("  cat")
    for cat in sorted(grammar.categories):
        abstract.append("    %s ;" % cat)
    if grammar.functions:
        abstract.append("  fun")
        for _, _, fun in grammar.functions:
            abstract.append("    %s : %s ;" % (fun.name, _fun_signature(fun)))
    abstract.append("}")

    concrete = []
    concrete.append(
        "concrete %sEng of %s = open SyntaxEng, ParadigmsEng, ConstructorsEng in {"
        % (name, name)
    )
    concrete.append("  lincat")
    for cat in sorted(grammar.categories):
        concrete.append("    %s = %s ;" % (cat, grammar.lincats.get(cat, cat)))
    if grammar.functions:
        concrete.append("  lin")
        for _, _, fun in grammar.functions:
            head = fun.name if not fun.arg_names else fun.name + " " + " ".join(fun.arg_names)
            concrete.append("    %s = %s ;" % (head, render_expr(fun.lin)))
    if grammar.opers:
        concrete.append("  oper")
        for oper_name in sorted(grammar.opers):
            concrete.append(
                "    %s = %s ;" % (oper_name, render_expr(grammar.opers[oper_name].definition))
            )
    concrete.append("}")

    return "\n".join(abstract) + "\n", "\n".join(concrete) + "\n"


def grammar_to_dict(grammar):
    from .encoder import expr_to_dict

    return {
        "start_category": grammar.start_category,
        "categories": sorted(grammar.categories),
        "lincats": dict(sorted(grammar.lincats.items())),
        "functions": [
            {
                "sentence_id": sid,
                "intra": intra,
                "name": f.name,
                "args": [{"name": n, "cat": c} for n, c in zip(f.arg_names, f.arg_cats)],
                "result": f.result,
                "lin": expr_to_dict(f.lin),
            }
            for sid, intra, f in grammar.functions
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


def grammar_from_dict(d):
    from .encoder import expr_from_dict

    grammar = GfGrammar(start_category=d.get("start_category", "Message"))
    grammar.categories = set(d["categories"])
    grammar.lincats = dict(d["lincats"])
    for f in d["functions"]:
        grammar.functions.append(
            (
                f.get("sentence_id", ""),
                f.get("intra", 0),
                GfFunction(
                    name=f["name"],
                    arg_names=tuple(a["name"] for a in f["args"]),
                    arg_cats=tuple(a["cat"] for a in f["args"]),
                    result=f["result"],
                    lin=expr_from_dict(f["lin"]),
                ),
            )
        )
    for o in d["opers"]:
        grammar.opers[o["name"]] = GfOper(
            name=o["name"], category=o["category"], definition=expr_from_dict(o["definition"])
        )
    return grammar
