"""Snowball-family stemmers for English, Dutch, German, and Italian.

Implemented from the published Snowball algorithm descriptions; no suitable
stemming package is available as a dependency. Deterministic by
construction. Idempotence is NOT guaranteed (and not promised): stemming an
already-stemmed form can shorten it further.
"""

from __future__ import annotations

from .errors import UnsupportedLanguageError

SUPPORTED_LANGUAGES = ("en", "nl", "de", "it")


def stem(token: str, language: str) -> str:
    """Stem one lowercase token with the Snowball variant for `language`."""
    if language == "en":
        return _stem_en(token)
    if language == "nl":
        return _stem_nl(token)
    if language == "de":
        return _stem_de(token)
    if language == "it":
        return _stem_it(token)
    raise UnsupportedLanguageError(f"no stemmer for language {language!r}")


def stem_words(surface: str, language: str) -> str:
    """Stem each word of a (possibly multi-word, possibly wildcard) pattern.

    A trailing ``*`` is preserved and its prefix left unstemmed: a prefix
    pattern has no well-defined stem.
    """
    out = []
    for w in surface.split(" "):
        if w.endswith("*"):
            out.append(w)
        else:
            out.append(stem(w, language))
    return " ".join(out)


def _standard_r1(word: str, vowels: str) -> int:
    for i in range(1, len(word)):
        if word[i] not in vowels and word[i - 1] in vowels:
            return i + 1
    return len(word)


def _r1_r2(word: str, vowels: str) -> tuple[int, int]:
    r1 = _standard_r1(word, vowels)
    r2 = r1 + _standard_r1(word[r1:], vowels) if r1 < len(word) else len(word)
    return r1, min(r2, len(word))


# ---------------------------------------------------------------------------
# English (Porter2)

_EN_VOWELS = "aeiouy"
_EN_DOUBLES = ("bb", "dd", "ff", "gg", "mm", "nn", "pp", "rr", "tt")
_EN_LI_VALID = "cdeghkmnrt"

_EN_EXCEPTIONS = {
    "skis": "ski", "skies": "sky", "dying": "die", "lying": "lie",
    "tying": "tie", "idly": "idl", "gently": "gentl", "ugly": "ugli",
    "early": "earli", "only": "onli", "singly": "singl",
    "sky": "sky", "news": "news", "howe": "howe", "atlas": "atlas",
    "cosmos": "cosmos", "bias": "bias", "andes": "andes",
}
_EN_STOP_AFTER_1A = {"inning", "outing", "canning", "herring", "earring",
                     "proceed", "exceed", "succeed"}

_EN_STEP2 = [
    ("ization", "ize"), ("ational", "ate"), ("fulness", "ful"),
    ("ousness", "ous"), ("iveness", "ive"), ("tional", "tion"),
    ("biliti", "ble"), ("lessli", "less"), ("entli", "ent"),
    ("ation", "ate"), ("alism", "al"), ("aliti", "al"), ("ousli", "ous"),
    ("iviti", "ive"), ("fulli", "ful"), ("enci", "ence"), ("anci", "ance"),
    ("abli", "able"), ("izer", "ize"), ("ator", "ate"), ("alli", "al"),
    ("bli", "ble"),
]
_EN_STEP3 = [
    ("ational", "ate"), ("tional", "tion"), ("alize", "al"),
    ("icate", "ic"), ("iciti", "ic"), ("ical", "ic"), ("ness", ""),
    ("ful", ""),
]
_EN_STEP4 = ["ement", "ance", "ence", "able", "ible", "ment", "ent", "ant",
             "ism", "ate", "iti", "ous", "ive", "ize", "ion", "al", "er",
             "ic"]


def _en_ends_short_syllable(word: str) -> bool:
    if len(word) == 2:
        return word[0] in _EN_VOWELS and word[1] not in _EN_VOWELS
    if len(word) >= 3:
        c = word[-1]
        return (c not in _EN_VOWELS and c not in "wxY"
                and word[-2] in _EN_VOWELS and word[-3] not in _EN_VOWELS)
    return False


def _stem_en(word: str) -> str:
    if word.startswith("'"):
        word = word[1:]
    if len(word) <= 2:
        return word
    if word in _EN_EXCEPTIONS:
        return _EN_EXCEPTIONS[word]

    # mark consonant-y
    chars = list(word)
    if chars[0] == "y":
        chars[0] = "Y"
    for i in range(1, len(chars)):
        if chars[i] == "y" and chars[i - 1] in _EN_VOWELS:
            chars[i] = "Y"
    word = "".join(chars)

    for prefix in ("gener", "commun", "arsen"):
        if word.startswith(prefix):
            r1 = len(prefix)
            break
    else:
        r1 = _standard_r1(word, _EN_VOWELS)
    r2 = r1 + _standard_r1(word[r1:], _EN_VOWELS) if r1 < len(word) else len(word)
    r2 = min(r2, len(word))

    # step 0
    for suf in ("'s'", "'s", "'"):
        if word.endswith(suf):
            word = word[: -len(suf)]
            break

    # step 1a
    if word.endswith("sses"):
        word = word[:-2]
    elif word.endswith(("ied", "ies")):
        word = word[:-2] if len(word) > 4 else word[:-1]
    elif word.endswith(("us", "ss")):
        pass
    elif word.endswith("s"):
        if any(ch in _EN_VOWELS for ch in word[:-2]):
            word = word[:-1]

    if word in _EN_STOP_AFTER_1A:
        return word

    # step 1b
    if word.endswith(("eedly", "eed")):
        suf = "eedly" if word.endswith("eedly") else "eed"
        if len(word) - len(suf) >= r1:
            word = word[: -len(suf)] + "ee"
    else:
        for suf in ("ingly", "edly", "ing", "ed"):
            if word.endswith(suf):
                trunk = word[: -len(suf)]
                if any(ch in _EN_VOWELS for ch in trunk):
                    word = trunk
                    if word.endswith(("at", "bl", "iz")):
                        word += "e"
                    elif word.endswith(_EN_DOUBLES):
                        word = word[:-1]
                    elif _en_ends_short_syllable(word) and r1 >= len(word):
                        word += "e"
                break

    # step 1c
    if (len(word) > 2 and word[-1] in "yY"
            and word[-2] not in _EN_VOWELS):
        word = word[:-1] + "i"

    # step 2 (suffix must lie in R1)
    for suf, rep in _EN_STEP2:
        if word.endswith(suf):
            if len(word) - len(suf) >= r1:
                word = word[: -len(suf)] + rep
            break
    else:
        if word.endswith("ogi"):
            if len(word) - 3 >= r1 and len(word) >= 4 and word[-4] == "l":
                word = word[:-1]
        elif word.endswith("li"):
            if len(word) - 2 >= r1 and len(word) >= 3 and word[-3] in _EN_LI_VALID:
                word = word[:-2]

    # step 3
    for suf, rep in _EN_STEP3:
        if word.endswith(suf):
            if len(word) - len(suf) >= r1:
                word = word[: -len(suf)] + rep
            break
    else:
        if word.endswith("ative") and len(word) - 5 >= r2:
            word = word[:-5]

    # step 4 (suffix must lie in R2)
    for suf in _EN_STEP4:
        if word.endswith(suf):
            if len(word) - len(suf) >= r2:
                if suf == "ion":
                    if len(word) >= 4 and word[-4] in "st":
                        word = word[:-3]
                else:
                    word = word[: -len(suf)]
            break

    # step 5
    if word.endswith("e"):
        if len(word) - 1 >= r2 or (
                len(word) - 1 >= r1
                and not _en_ends_short_syllable(word[:-1])):
            word = word[:-1]
    elif word.endswith("ll") and len(word) - 1 >= r2:
        word = word[:-1]

    return word.replace("Y", "y")


# ---------------------------------------------------------------------------
# German

_DE_VOWELS = "aeiouyäöü"
_DE_S_ENDING = "bdfghklmnrt"
_DE_ST_ENDING = "bdfghklmnt"


def _stem_de(word: str) -> str:
    word = word.replace("ß", "ss")
    chars = list(word)
    for i in range(1, len(chars) - 1):
        if chars[i] in "uy" and chars[i - 1] in _DE_VOWELS \
                and chars[i + 1] in _DE_VOWELS:
            chars[i] = chars[i].upper()
    word = "".join(chars)

    r1, r2 = _r1_r2(word, _DE_VOWELS)
    r1 = max(r1, 3)

    # step 1
    if word.endswith(("em", "ern", "er")):
        suf = "ern" if word.endswith("ern") else word[-2:]
        if len(word) - len(suf) >= r1:
            word = word[: -len(suf)]
    elif word.endswith(("en", "es", "e")):
        suf = word[-2:] if word.endswith(("en", "es")) else "e"
        if len(word) - len(suf) >= r1:
            word = word[: -len(suf)]
            if word.endswith("niss"):
                word = word[:-1]
    elif word.endswith("s"):
        if len(word) - 1 >= r1 and len(word) >= 2 and word[-2] in _DE_S_ENDING:
            word = word[:-1]

    # step 2
    if word.endswith("est"):
        if len(word) - 3 >= r1:
            word = word[:-3]
    elif word.endswith(("en", "er")):
        if len(word) - 2 >= r1:
            word = word[:-2]
    elif word.endswith("st"):
        if (len(word) - 2 >= r1 and len(word) >= 6
                and word[-3] in _DE_ST_ENDING):
            word = word[:-2]

    # step 3 (d-suffixes)
    if word.endswith(("end", "ung")):
        if len(word) - 3 >= r2:
            word = word[:-3]
            if (word.endswith("ig") and len(word) - 2 >= r2
                    and not word.endswith("eig")):
                word = word[:-2]
    elif word.endswith(("ig", "ik", "isch")):
        suf = "isch" if word.endswith("isch") else word[-2:]
        if len(word) - len(suf) >= r2 and not word[: -len(suf)].endswith("e"):
            word = word[: -len(suf)]
    elif word.endswith(("lich", "heit")):
        if len(word) - 4 >= r2:
            word = word[:-4]
            if word.endswith(("er", "en")) and len(word) - 2 >= r1:
                word = word[:-2]
    elif word.endswith("keit"):
        if len(word) - 4 >= r2:
            word = word[:-4]
            if word.endswith("lich") and len(word) - 4 >= r2:
                word = word[:-4]
            elif word.endswith("ig") and len(word) - 2 >= r2:
                word = word[:-2]

    word = word.replace("U", "u").replace("Y", "y")
    return (word.replace("ä", "a").replace("ö", "o").replace("ü", "u"))


# ---------------------------------------------------------------------------
# Dutch

_NL_VOWELS = "aeiouyè"
_NL_ACCENT_MAP = str.maketrans("äëïöüáéíóú", "aeiouaeiou")


def _nl_undouble(word: str) -> str:
    if word.endswith(("kk", "dd", "tt")):
        return word[:-1]
    return word


def _nl_valid_en_ending(trunk: str) -> bool:
    return (bool(trunk) and trunk[-1] not in _NL_VOWELS
            and not trunk.endswith("gem"))


def _stem_nl(word: str) -> str:
    word = word.translate(_NL_ACCENT_MAP)
    chars = list(word)
    if chars and chars[0] == "y":
        chars[0] = "Y"
    for i in range(1, len(chars)):
        if chars[i] == "y" and chars[i - 1] in _NL_VOWELS:
            chars[i] = "Y"
        elif (chars[i] == "i" and i + 1 < len(chars)
                and chars[i - 1] in _NL_VOWELS and chars[i + 1] in _NL_VOWELS):
            chars[i] = "I"
    word = "".join(chars)

    r1, r2 = _r1_r2(word, _NL_VOWELS)
    r1 = max(r1, 3)

    # step 1
    if word.endswith("heden"):
        if len(word) - 5 >= r1:
            word = word[:-5] + "heid"
    elif word.endswith(("ene", "en")):
        suf = "ene" if word.endswith("ene") else "en"
        trunk = word[: -len(suf)]
        if len(word) - len(suf) >= r1 and _nl_valid_en_ending(trunk):
            word = _nl_undouble(trunk)
    elif word.endswith(("se", "s")):
        suf = "se" if word.endswith("se") else "s"
        trunk = word[: -len(suf)]
        if (len(word) - len(suf) >= r1 and trunk
                and trunk[-1] not in _NL_VOWELS + "j"):
            word = trunk

    # step 2
    e_removed = False
    if (word.endswith("e") and len(word) - 1 >= r1
            and len(word) >= 2 and word[-2] not in _NL_VOWELS):
        word = _nl_undouble(word[:-1])
        e_removed = True

    # step 3a
    if word.endswith("heid") and len(word) - 4 >= r2 \
            and not word.endswith("cheid"):
        word = word[:-4]
        if word.endswith("en"):
            trunk = word[:-2]
            if len(word) - 2 >= r1 and _nl_valid_en_ending(trunk):
                word = _nl_undouble(trunk)

    # step 3b
    if word.endswith(("end", "ing")):
        if len(word) - 3 >= r2:
            word = word[:-3]
            if (word.endswith("ig") and len(word) - 2 >= r2
                    and not word.endswith("eig")):
                word = word[:-2]
            else:
                word = _nl_undouble(word)
    elif word.endswith("lijk"):
        if len(word) - 4 >= r2:
            word = word[:-4]
            if (word.endswith("e") and len(word) - 1 >= r1
                    and len(word) >= 2 and word[-2] not in _NL_VOWELS):
                word = _nl_undouble(word[:-1])
    elif word.endswith("baar"):
        if len(word) - 4 >= r2:
            word = word[:-4]
    elif word.endswith("bar"):
        if len(word) - 3 >= r2 and e_removed:
            word = word[:-3]
    elif word.endswith("ig"):
        if len(word) - 2 >= r2 and not word.endswith("eig"):
            word = word[:-2]

    # step 4: undouble vowel in c-vv-c endings
    if len(word) >= 4:
        c1, v1, v2, c2 = word[-4], word[-3], word[-2], word[-1]
        if (c1 not in _NL_VOWELS and v1 == v2 and v1 in "aeou"
                and c2 not in _NL_VOWELS and c2 != "I"):
            word = word[:-2] + word[-1]

    return word.replace("Y", "y").replace("I", "i")


# ---------------------------------------------------------------------------
# Italian

_IT_VOWELS = "aeiouàèìòù"
_IT_ACCENT_MAP = str.maketrans("áéíóú", "àèìòù")

_IT_PRONOUNS = sorted(
    ["ci", "gli", "la", "le", "li", "lo", "mi", "ne", "si", "ti", "vi",
     "sene", "gliela", "gliele", "glieli", "glielo", "gliene",
     "mela", "mele", "meli", "melo", "mene",
     "tela", "tele", "teli", "telo", "tene",
     "cela", "cele", "celi", "celo", "cene",
     "vela", "vele", "veli", "velo", "vene"],
    key=len, reverse=True)

_IT_STEP1_DELETE_R2 = sorted(
    ["anza", "anze", "ico", "ici", "ica", "ice", "iche", "ichi", "ismo",
     "ismi", "abile", "abili", "ibile", "ibili", "ista", "iste", "isti",
     "istà", "istè", "istì", "oso", "osi", "osa", "ose", "mente",
     "atrice", "atrici", "ante", "anti"],
    key=len, reverse=True)

_IT_STEP2 = sorted(
    ["ammo", "ando", "ano", "are", "arono", "asse", "assero", "assi",
     "assimo", "ata", "ate", "ati", "ato", "ava", "avamo", "avano", "avate",
     "avi", "avo", "emmo", "enda", "ende", "endi", "endo", "erà", "erai",
     "eranno", "ere", "erebbe", "erebbero", "erei", "eremmo", "eremo",
     "ereste", "eresti", "erete", "erò", "erono", "essero", "ete", "eva",
     "evamo", "evano", "evate", "evi", "evo", "Yamo", "iamo", "immo", "irà",
     "irai", "iranno", "ire", "irebbe", "irebbero", "irei", "iremmo",
     "iremo", "ireste", "iresti", "irete", "irò", "irono", "isca",
     "iscano", "isce", "isci", "isco", "iscono", "issero", "ita", "ite",
     "iti", "ito", "iva", "ivamo", "ivano", "ivate", "ivi", "ivo", "ono",
     "uta", "ute", "uti", "uto", "ar", "ir"],
    key=len, reverse=True)


def _it_rv(word: str) -> int:
    if len(word) < 3:
        return len(word)
    if word[1] not in _IT_VOWELS:
        for i in range(2, len(word)):
            if word[i] in _IT_VOWELS:
                return i + 1
        return len(word)
    if word[0] in _IT_VOWELS:
        for i in range(2, len(word)):
            if word[i] not in _IT_VOWELS:
                return i + 1
        return len(word)
    return 3


def _stem_it(word: str) -> str:
    word = word.translate(_IT_ACCENT_MAP)
    chars = list(word)
    for i in range(1, len(chars)):
        if chars[i] == "u" and chars[i - 1] == "q":
            chars[i] = "U"
        elif (chars[i] in "ui" and i + 1 < len(chars)
                and chars[i - 1] in _IT_VOWELS and chars[i + 1] in _IT_VOWELS):
            chars[i] = chars[i].upper()
    word = "".join(chars)

    rv = _it_rv(word)
    r1, r2 = _r1_r2(word, _IT_VOWELS)

    # step 0: attached pronouns
    for suf in _IT_PRONOUNS:
        if word.endswith(suf) and len(word) - len(suf) >= rv:
            trunk = word[: -len(suf)]
            if trunk.endswith(("ando", "endo")) \
                    and len(trunk) - 4 >= rv:
                word = trunk
            elif trunk.endswith(("ar", "er", "ir")) \
                    and len(trunk) - 2 >= rv:
                word = trunk + "e"
            break

    # step 1: standard suffixes
    before = word
    if word.endswith("amente"):
        if len(word) - 6 >= r1:
            word = word[:-6]
            if word.endswith("iv") and len(word) - 2 >= r2:
                word = word[:-2]
                if word.endswith("at") and len(word) - 2 >= r2:
                    word = word[:-2]
            else:
                for pre in ("abil", "os", "ic"):
                    if word.endswith(pre) and len(word) - len(pre) >= r2:
                        word = word[: -len(pre)]
                        break
    elif word.endswith(("azione", "azioni", "atore", "atori")):
        suf = word[-6:] if word.endswith(("azione", "azioni")) else word[-5:]
        if len(word) - len(suf) >= r2:
            word = word[: -len(suf)]
            if word.endswith("ic") and len(word) - 2 >= r2:
                word = word[:-2]
    elif word.endswith(("logia", "logie")):
        if len(word) - 5 >= r2:
            word = word[:-2]
    elif word.endswith(("uzione", "uzioni", "usione", "usioni")):
        if len(word) - 6 >= r2:
            word = word[:-5]
    elif word.endswith(("enza", "enze")):
        if len(word) - 4 >= r2:
            word = word[:-4] + "ente"
    elif word.endswith(("amento", "amenti", "imento", "imenti")):
        if len(word) - 6 >= rv:
            word = word[:-6]
    elif word.endswith("ità"):
        if len(word) - 3 >= r2:
            word = word[:-3]
            for pre in ("abil", "ic", "iv"):
                if word.endswith(pre) and len(word) - len(pre) >= r2:
                    word = word[: -len(pre)]
                    break
    elif word.endswith(("ivo", "ivi", "iva", "ive")):
        if len(word) - 3 >= r2:
            word = word[:-3]
            if word.endswith("at") and len(word) - 2 >= r2:
                word = word[:-2]
                if word.endswith("ic") and len(word) - 2 >= r2:
                    word = word[:-2]
    else:
        for suf in _IT_STEP1_DELETE_R2:
            if word.endswith(suf):
                if len(word) - len(suf) >= r2:
                    word = word[: -len(suf)]
                break

    # step 2: verb suffixes, only when step 1 removed nothing
    if word == before:
        for suf in _IT_STEP2:
            if word.endswith(suf):
                if len(word) - len(suf) >= rv:
                    word = word[: -len(suf)]
                break

    # step 3a: final vowel (and a preceding i) in RV
    if word and word[-1] in "aeioàèìò" and len(word) - 1 >= rv:
        word = word[:-1]
        if word.endswith("i") and len(word) - 1 >= rv:
            word = word[:-1]

    # step 3b
    if word.endswith(("ch", "gh")) and len(word) - 1 >= rv:
        word = word[:-1]

    return word.replace("I", "i").replace("U", "u")
