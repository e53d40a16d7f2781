'''
Suggest the command a user most likely meant when an unknown command is given.

See http://norvig.com/spell-correct.html for documentation
'''

import string

## Filled with the available command names (and their short names) by the client.
DICTIONARY = {}


def setDictionary(names):
    DICTIONARY.clear()
    for name in names:
        DICTIONARY[name] = DICTIONARY.get(name, 0) + 1

LETTERS = string.ascii_lowercase + '_'

def edits1(word):
    splits     = [(word[:i], word[i:]) for i in range(len(word) + 1)]
    deletes    = [a + b[1:] for a, b in splits if b]
    transposes = [a + b[1] + b[0] + b[2:] for a, b in splits if len(b)>1]
    replaces   = [a + c + b[1:] for a, b in splits for c in LETTERS if b]
    inserts    = [a + c + b     for a, b in splits for c in LETTERS]
    return set(deletes + transposes + replaces + inserts)

def known_edits2(word):
    return set(e2 for e1 in edits1(word) for e2 in edits1(e1) if e2 in DICTIONARY)

def known(words): return set(w for w in words if w in DICTIONARY)

def correct(word):
    """ the closest known command, or the word itself when nothing is close """
    word = word.lower()
    candidates = known([word]) or known(edits1(word)) or known_edits2(word) or [word]
    return max(sorted(candidates), key=lambda w: DICTIONARY.get(w, 0))

def is_correct(word):
    return word in DICTIONARY
