#!/usr/bin/env python3
"""Writes the miniature WordNet used by the tests (data/index files with real
byte offsets, plus a cumulative information-content file)."""
import os
import sys

HEADER = [
    "  1 Miniature WordNet-format database for colourlex tests.",
    "  2 Layout follows the WordNet 3.0 data/index files.",
]

# key: (lex_filenum, lemmas, hypernym keys, gloss, cumulative count)
NOUNS = {
    "entity": (3, ["entity"], [], "that which is perceived or known or inferred to have its own distinct existence", 1000),
    "abstraction": (3, ["abstraction"], ["entity"], "a general concept formed by extracting common features from specific examples", 700),
    "attribute": (3, ["attribute"], ["abstraction"], "an abstraction belonging to or characteristic of an entity", 600),
    "property": (7, ["property"], ["attribute"], "a basic or essential attribute shared by all members of a class", 320),
    "visual_property": (7, ["visual_property"], ["property"], "an attribute of vision", 300),
    "colour": (7, ["color", "colour", "coloring"], ["visual_property"], "a visual attribute of things that results from the light they emit or transmit or reflect", 250),
    "chromatic": (7, ["chromatic_color", "chromatic_colour", "spectral_color"], ["colour"], "a color that has hue", 150),
    "red": (7, ["red", "redness"], ["chromatic"], "red color or pigment; the chromatic color resembling the hue of blood", 50),
    "blue": (7, ["blue", "blueness"], ["chromatic"], "blue color or pigment; resembling the color of the clear sky in the daytime", 40),
    "green": (7, ["green", "greenness", "viridity"], ["chromatic"], "green color or pigment; resembling the color of growing grass", 40),
    "achromatic": (7, ["achromatic_color", "achromatic_colour"], ["colour"], "a color lacking hue; white or gray or black", 90),
    "white": (7, ["white", "whiteness"], ["achromatic"], "the quality or state of the achromatic color of greatest lightness bearing the least resemblance to black", 45),
    "black": (7, ["black", "blackness", "inkiness"], ["achromatic"], "the quality or state of the achromatic color of least lightness bearing the least resemblance to white", 40),
    "grey": (7, ["grey", "gray", "greyness", "grayness"], ["achromatic"], "an achromatic color of any lightness intermediate between the extremes of white and black", 5),
    "state": (26, ["state"], ["attribute"], "the way something is with respect to its main attributes", 260),
    "darkness": (26, ["darkness", "dark"], ["state"], "absence of light or illumination", 60),
    "night_black": (26, ["black", "pitch_black"], ["darkness"], "total absence of light at night", 20),
    "symptom": (26, ["symptom"], ["state"], "any sensation or change in bodily function experienced by a patient", 100),
    "rubor": (26, ["redness", "red", "rubor"], ["symptom"], "redness of the skin caused by swelling and heat", 40),
    "inflammation": (26, ["inflammation", "inflaming"], ["rubor"], "a response of body tissue to injury or irritation characterized by pain and swelling and redness and heat", 30),
    "sky": (17, ["sky"], ["entity"], "the atmosphere and outer space as viewed from the earth", 80),
}

ADJS = {
    "red_adj": (0, ["red", "reddish", "ruddy"], [], "of a color at the end of the color spectrum next to orange; resembling the color of blood or cherries or tomatoes or rubies"),
    "blue_adj": (0, ["blue", "bluish"], [], "having a color similar to that of a clear unclouded sky"),
}


def hex2(n):
    return "%02x" % n


def build(entries, pos_letter, with_counts):
    keys = list(entries)
    hyponyms = {k: [] for k in keys}
    for k in keys:
        for h in entries[k][2]:
            hyponyms[h].append(k)

    def line(k, offsets):
        lex, lemmas, hypers, gloss = entries[k][:4]
        ptrs = [("@", h) for h in hypers] + [("~", c) for c in hyponyms[k]]
        parts = ["%08d" % offsets[k], "%02d" % lex, pos_letter, hex2(len(lemmas))]
        for lemma in lemmas:
            parts += [lemma, "0"]
        parts.append("%03d" % len(ptrs))
        for sym, target in ptrs:
            parts += [sym, "%08d" % offsets[target], pos_letter, "0000"]
        return " ".join(parts) + " | " + gloss + "  \n"

    offsets = {k: 0 for k in keys}
    pos = sum(len(h) + 1 for h in HEADER)
    for k in keys:
        offsets[k] = pos
        pos += len(line(k, offsets).encode())
    text = "".join(h + "\n" for h in HEADER) + "".join(line(k, offsets) for k in keys)

    index = {}
    for k in keys:
        for lemma in entries[k][1]:
            index.setdefault(lemma.lower(), []).append(k)
    idx_lines = []
    for lemma in sorted(index):
        ks = index[lemma]
        symbols = sorted({"@" for k in ks if entries[k][2]} | {"~" for k in ks if hyponyms[k]})
        idx_lines.append(" ".join([lemma, pos_letter, str(len(ks)), str(len(symbols))] + symbols +
                                  [str(len(ks)), "0"] + ["%08d" % offsets[k] for k in ks]) + "  \n")
    index_text = "".join(h + "\n" for h in HEADER) + "".join(idx_lines)
    return text, index_text, offsets


def main(out_dir):
    os.makedirs(out_dir, exist_ok=True)
    noun_data, noun_index, noun_offsets = build(NOUNS, "n", True)
    adj_data, adj_index, _ = build(ADJS, "a", False)
    for name, text in [("data.noun", noun_data), ("index.noun", noun_index),
                       ("data.adj", adj_data), ("index.adj", adj_index)]:
        with open(os.path.join(out_dir, name), "w") as f:
            f.write(text)
    with open(os.path.join(out_dir, "..", "ic-fixture.dat"), "w") as f:
        f.write("wnver::fixture\n")
        for k, v in NOUNS.items():
            root = " ROOT" if not v[2] else ""
            f.write("%dn %d%s\n" % (noun_offsets[k], v[4], root))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "dict"))
