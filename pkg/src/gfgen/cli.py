"""Command-line surface: ingest, synthesize, export, linearize, verbalize, eval."""

import argparse
import json
import sys
from pathlib import Path

from . import corpus_eval, engine, verbalizer
from .components import build_chunk, main_components
from .encoder import fragment_from_dict, fragment_to_dict, synthesize_sentence
from .exporter import merge, render
from .ingest import facts_to_text, parse_conllu_file
from .linearizer import linearize
from .structure import recognize, select


def _cmd_ingest(args):
    sentences = parse_conllu_file(args.conllu)
    programs = [facts_to_text(f) for f in sentences]
    sys.stdout.write("\n".join(programs) if len(programs) > 1 else "".join(programs))
    return 0


def _dump_structures(sentences, out):
    for facts in sentences:
        selected = select(recognize(facts))
        if selected is None:
            out.write("%s\tUNRECOGNIZED\n" % facts.sentence_id)
        else:
            out.write("%s\t%d\t%d\n" % (facts.sentence_id, selected.kind, selected.i_value))


def _dump_components(sentences, out):
    report = []
    for facts in sentences:
        selected = select(recognize(facts))
        entry = {"sentence_id": facts.sentence_id}
        if selected is None:
            entry["structure"] = None
        else:
            entry["structure"] = {"kind": selected.kind, "i_value": selected.i_value}
            roles = main_components(facts, selected)
            entry["roles"] = roles.as_dict()
            entry["chunks"] = {
                role: build_chunk(facts, index).to_dict()
                for role, index in roles.as_dict().items()
            }
        report.append(entry)
    json.dump(report, out, indent=2, sort_keys=True)
    out.write("\n")


def _dump_models(sentences, out):
    for facts in sentences:
        model = engine.derive_family(engine.sentence_atoms(facts), "structure")
        out.write("%% sentence %s\n" % facts.sentence_id)
        out.write(engine.model_to_text(model))


def _cmd_synthesize(args):
    sentences = parse_conllu_file(args.conllu)
    if args.dump_structures:
        _dump_structures(sentences, sys.stdout)
        return 0
    if args.dump_components:
        _dump_components(sentences, sys.stdout)
        return 0
    if args.dump_models:
        _dump_models(sentences, sys.stdout)
        return 0
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    written = 0
    for facts in sentences:
        fragment = synthesize_sentence(facts)
        if fragment is None:
            print("skip %s: structure unrecognized" % facts.sentence_id, file=sys.stderr)
            continue
        path = outdir / ("frag_%s.json" % facts.sentence_id)
        path.write_text(
            json.dumps(fragment_to_dict(fragment), indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
        )
        written += 1
    print("wrote %d fragment(s) to %s" % (written, outdir), file=sys.stderr)
    return 0


def _load_fragments(paths):
    files = []
    for p in paths:
        path = Path(p)
        if path.is_dir():
            files.extend(sorted(path.glob("*.json")))
        else:
            files.append(path)
    return [
        fragment_from_dict(json.loads(path.read_text(encoding="utf-8"))) for path in files
    ]


def _cmd_export(args):
    grammar = merge(_load_fragments(args.fragments))
    name = Path(args.output)
    abstract, concrete = render(grammar, name.name)
    abstract_path = name.with_name(name.name + ".gf")
    concrete_path = name.with_name(name.name + "Eng.gf")
    abstract_path.write_text(abstract, encoding="utf-8")
    concrete_path.write_text(concrete, encoding="utf-8")
    print("wrote %s and %s" % (abstract_path, concrete_path), file=sys.stderr)
    return 0


def _cmd_linearize(args):
    grammar = merge(_load_fragments(args.grammar))
    text = linearize(grammar, args.fun, args=args.args or [], period=args.period)
    print(text)
    return 0


def _cmd_verbalize(args):
    annotations = verbalizer.load_annotations(
        Path(args.annotations).read_text(encoding="utf-8")
    )
    if args.atoms:
        atoms = verbalizer.parse_atoms(Path(args.atoms).read_text(encoding="utf-8"))
        print(verbalizer.verbalize_atoms(atoms, annotations))
    if args.triples:
        triples = verbalizer.parse_triples(Path(args.triples).read_text(encoding="utf-8"))
        for sentence in verbalizer.verbalize_triples(triples, annotations):
            print(sentence)
    return 0


def _cmd_eval(args):
    scores = corpus_eval.run_corpus(args.corpus)
    if args.report:
        corpus_eval.write_report(scores, args.report)
    for portal in sorted(scores):
        s = scores[portal]
        print(
            "%s: %d sentences, %d recognized, %d BLEU-assessable, "
            "BLEU %.1f, ROUGE-1 %.1f, ROUGE-2 %.1f, ROUGE-L %.1f"
            % (
                portal,
                s.n_sentences,
                s.n_recognized,
                s.n_bleu_assessable,
                s.bleu3,
                s.rouge1_f,
                s.rouge2_f,
                s.rougeL_f,
            )
        )
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gfgen",
        description="Synthesize GF grammars from dependency parses and evaluate round trips.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="print the fact program of each sentence")
    p.add_argument("conllu")
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("synthesize", help="write per-sentence grammar fragments")
    p.add_argument("conllu")
    p.add_argument("-o", "--output", default="fragments")
    p.add_argument("--dump-structures", action="store_true")
    p.add_argument("--dump-components", action="store_true")
    p.add_argument("--dump-models", action="store_true", help="debug: derived atoms as facts")
    p.set_defaults(func=_cmd_synthesize)

    p = sub.add_parser("export", help="merge fragments and write Name.gf/NameEng.gf")
    p.add_argument("fragments", nargs="+", help="fragment JSON files or directories")
    p.add_argument("-o", "--output", required=True, help="grammar name/path prefix")
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("linearize", help="realize a grammar function as English")
    p.add_argument("--grammar", nargs="+", required=True, help="fragment JSON files")
    p.add_argument("--fun", required=True)
    p.add_argument("--args", nargs="*", default=[])
    p.add_argument("--period", action="store_true")
    p.set_defaults(func=_cmd_linearize)

    p = sub.add_parser("verbalize", help="verbalize atoms or triples via annotations")
    p.add_argument("--annotations", required=True)
    p.add_argument("--atoms")
    p.add_argument("--triples")
    p.set_defaults(func=_cmd_verbalize)

    p = sub.add_parser("eval", help="round-trip a fixture corpus and score it")
    p.add_argument("--corpus", required=True)
    p.add_argument("--report")
    p.set_defaults(func=_cmd_eval)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
