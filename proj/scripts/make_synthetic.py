#!/usr/bin/env python3
"""Regenerates data/synthetic.csv, the bundled 200-tweet fixture corpus.

Two keyword-disjoint classes: sarcastic tweets draw from exaggerated-praise
vocabulary, non-sarcastic tweets from mundane daily-life vocabulary. Surface
noise (elongations, diacritics, Latin fillers, emoji, punctuation) exercises
the cleaning pipeline without breaking the class separation.
"""

import csv
import random
import sys

SARCASTIC_WORDS = [
    "عظيم", "رائع", "ممتاز", "مبهر", "خرافي", "اسطوري", "عبقري", "فله",
    "برافو", "تحفة", "كفو", "يسلم", "تصدق", "ابداع", "مذهل", "بطل",
]

PLAIN_WORDS = [
    "حزين", "تعبان", "مريض", "مرهق", "زحام", "مطر", "دوام", "عمل",
    "مدرسة", "شارع", "سيارة", "بيت", "نوم", "قهوة", "صباح", "مساء",
]

FILLERS = ["يا", "في", "من", "على", "هذا", "اليوم", "جدا", "والله"]

LATIN_NOISE = ["lol", "wow", "omg", "hhhh", "ok", "nice"]
EMOJI = ["\U0001f602", "\U0001f644", "\U0001f612", "\U0001f60f", "❤"]
PUNCT = ["!!!", "؟؟", "...", "!!", "#", "@@"]
DIACRITICS = ["َ", "ُ", "ِ", "ّ", "ً"]
DIALECTS = ["egypt", "gulf", "levant", "msa", "maghreb", ""]

REPHRASES = [
    "القصد ان الوضع لم يعجبني",
    "اعني ان الامر كان سيئا",
    "في الحقيقة لم يكن جيدا",
    "اقصد ان النتيجة مخيبة",
]


def add_noise(rng, word):
    # Only cleaning-reversible noise, so every cue word normalizes back to its
    # base form and keeps a healthy document frequency.
    roll = rng.random()
    if roll < 0.15:
        # Sprinkle a diacritic after a random letter.
        pos = rng.randrange(1, len(word) + 1)
        return word[:pos] + rng.choice(DIACRITICS) + word[pos:]
    if roll < 0.25:
        # Tatweel stretch.
        pos = rng.randrange(1, len(word))
        return word[:pos] + "ـ" + word[pos:]
    return word


def make_text(rng, class_words, sarcastic):
    words = [add_noise(rng, w) for w in rng.sample(class_words, rng.randint(5, 7))]
    words += rng.sample(FILLERS, rng.randint(1, 3))
    if sarcastic and rng.random() < 0.4:
        words.append("ه" * rng.randint(3, 7))  # laughter, cleans to "هه"
    if rng.random() < 0.3:
        words.append(rng.choice(LATIN_NOISE))
    if rng.random() < 0.3:
        words.append(rng.choice(EMOJI))
    if rng.random() < 0.3:
        words.append(rng.choice(PUNCT))
    rng.shuffle(words)
    text = " ".join(words)
    if rng.random() < 0.1:
        text = text.replace(" ", ", ", 1)  # exercise CSV quoting
    return text


def main(out_path):
    rng = random.Random(20220)
    rows = []
    for i in range(100):
        rows.append(
            {
                "text": make_text(rng, SARCASTIC_WORDS, True),
                "sarcastic": "1",
                "dialect": rng.choice(DIALECTS),
                "rephrase": rng.choice(REPHRASES) if rng.random() < 0.8 else "",
            }
        )
        rows.append(
            {
                "text": make_text(rng, PLAIN_WORDS, False),
                "sarcastic": "0",
                "dialect": rng.choice(DIALECTS),
                "rephrase": "",
            }
        )
    rng.shuffle(rows)

    with open(out_path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(
            f,
            fieldnames=["text", "sarcastic", "dialect", "rephrase"],
            quoting=csv.QUOTE_MINIMAL,
            lineterminator="\n",
        )
        writer.writeheader()
        writer.writerows(rows)
    print(f"wrote {len(rows)} rows to {out_path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/synthetic.csv")
