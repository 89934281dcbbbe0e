#!/usr/bin/env python3
# Copyright 2026 The sarct Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Builds data/sentiment_lexicon.tsv from seed word lists.

Seeds are grouped by word class so that regular inflections can be
generated with ordinary spelling rules. Scores are +1.0 / -1.0 by
polarity class. Run from the repository root:

    python3 scripts/make_lexicon.py
"""

import os
import sys

POS_ADJ = """
able acceptable accomplished adept admirable adorable adventurous affable
affectionate affordable agreeable alert amazing ambitious amiable ample
appealing appreciative apt articulate astonishing astounding athletic
attentive attractive authentic awesome beautiful believable beloved
beneficial benevolent blissful bold brainy brave breathtaking bright
brilliant calm capable captivating carefree caring celebrated charismatic
charitable charming cheerful cheery chic civil classy clean clear clever
colorful comfortable commendable compassionate competent competitive
complete confident considerate consistent constructive convenient cordial
courageous courteous cozy creative credible cute dandy dazzling decent
dedicated delicious delightful dependable deserving desirable devoted
diligent diplomatic distinguished divine dynamic eager earnest easy
ecstatic educated effective efficient effortless elegant eloquent eminent
enchanting encouraging endearing energetic engaging enjoyable enthusiastic
euphoric excellent exceptional excited exciting exemplary exquisite
extraordinary fabulous fair faithful famous fancy fantastic fascinating
fashionable favorable favorite fearless fertile festive fine fit flawless
flexible fond forgiving fortunate fragrant free fresh friendly fruitful
fulfilling fun funny generous gentle genuine gifted glad glamorous gleeful
glorious golden good gorgeous graceful gracious grand grateful great
gutsy handsome handy happy hardy harmonious healthy heartfelt heartwarming
heavenly helpful heroic honest honorable hopeful hospitable humble humane
humorous ideal illustrious imaginative immaculate impartial impeccable
important impressive incredible industrious ingenious innocent innovative
insightful inspirational inspiring instructive intelligent interesting
intuitive inventive invigorating inviting irresistible jolly jovial joyful
joyous jubilant keen kind knowledgeable laudable lavish legendary likable
lively lovable lovely loyal lucid lucky luminous lush luxurious magical
magnificent majestic marvelous masterful mature meaningful memorable
merciful merry meticulous mighty miraculous modern modest momentous moral
motivated neat nice nifty nimble noble notable noteworthy nourishing
nutritious obedient optimistic opulent orderly original outstanding
passionate patient peaceful perfect perky personable persuasive phenomenal
pious playful pleasant pleasing plentiful plush poised polished polite
popular positive powerful practical praiseworthy precious precise premier
prestigious pretty priceless principled pristine productive proficient
profound progressive prominent prompt proper prosperous proud prudent
punctual pure purposeful quaint qualified quick-witted quiet radiant
rational realistic reasonable refined refreshing regal relaxed relevant
reliable remarkable resilient resolute resourceful respectable respectful
responsible responsive restful revolutionary rewarding rich right righteous
robust romantic rosy safe satisfactory savvy scenic secure seamless
selfless sensational sensible serene sharp shiny significant sincere
skilled skillful sleek slick smart smooth snappy snug sociable soft
soothing sophisticated sound spacious sparkling spectacular speedy spirited
splendid spotless stable steadfast steady stellar stimulating straightforward
striking strong stunning stupendous sturdy stylish sublime substantial
subtle successful sufficient suitable sunny superb superior supportive
supreme sweet swift sympathetic talented tasteful tasty tenacious tender
terrific thankful thorough thoughtful thrifty thrilling tidy timeless
tolerant top tranquil tremendous trendy true trustworthy truthful unbeatable
unbiased unique uplifting upright upstanding useful valiant valuable
venerable versatile vibrant victorious vigilant vigorous virtuous visionary
vital vivacious vivid warm wealthy welcoming well-behaved well-made
well-mannered well-rounded whimsical wholesome willing winning wise witty
wonderful wondrous worthwhile worthy youthful zealous zesty
""".split()

POS_VERB = """
accomplish achieve admire adore advance affirm aid amaze amuse applaud
appreciate approve assist assure astonish attract award beautify befriend
benefit bless bloom blossom boost brighten captivate celebrate champion
charm cherish comfort commend compliment congratulate console cooperate
dazzle delight discover educate elevate embrace empower enchant encourage
endorse energize engage enhance enjoy enlighten enliven enrich entertain
enthrall excel excite fancy fascinate fix flatter flourish forgive foster
gain gladden glow guide heal help honor impress improve inspire intrigue
invigorate laud liberate love mend mentor motivate nourish nurture outshine
overcome perfect persevere please praise prefer progress promote prosper
protect recommend recover refresh rejoice rejuvenate relish renew repair
rescue respect restore revitalize revive reward salute satisfy save savor
shine smile soothe sparkle succeed support surpass sustain thank thrill
thrive treasure triumph trust uplift value welcome win wow
""".split()

POS_NOUN = """
abundance accolade achievement admiration advantage affection alliance
ambition angel applause asset award beauty benefactor benefit blessing
bliss bonus bravery breakthrough brilliance champion charisma charity
cheer comfort compassion compliment confidence courage courtesy
craftsmanship creativity darling delight dignity diligence discovery
ease elegance empathy encouragement energy enjoyment enthusiasm excellence
excitement expertise fortune freedom friend friendship generosity genius
gift glee glory goodness goodwill grace gratitude harmony haven hero
heroine honesty honor hope hospitality humor idol innovation integrity
joy jubilation justice kindness laughter luck luxury marvel masterpiece
mercy merit miracle optimism paradise passion patience peace perfection
pleasure praise pride privilege prize progress promise prosperity
protection purity radiance relief remedy resilience respect reward romance
sanctuary satisfaction serenity sincerity skill smile splendor strength
success sunshine support sweetheart sympathy talent thanks treasure
treat tribute triumph trust truth valor victory virtue vitality warmth
wealth welcome willpower winner wisdom wonder zeal zest
""".split()

NEG_ADJ = """
abysmal aggravating aggressive alarming aloof angry annoying anxious
apathetic appalling arrogant ashamed atrocious awful awkward bad barbaric
barren belligerent bitter bizarre bland bleak bogus boring bossy brash
brutal bumpy careless catastrophic chaotic cheap childish clumsy coarse
cold combative conceited condescending confused contemptible contentious
corrupt costly cowardly crabby cranky crass crazy creepy criminal crooked
crude cruel cumbersome cursed cynical damaged dangerous dark deadly
deafening deceitful deceptive defective defiant deficient degrading
dejected delinquent demeaning demoralizing deplorable depressed depressing
deranged desolate desperate despicable destructive detestable devious
dire dirty disagreeable disappointing disastrous disgraceful disgusting
dishonest dishonorable dismal disobedient disorderly disrespectful
disruptive distasteful distraught distressed disturbing doomed downcast
dowdy drab draconian dreadful dreary dubious dull dumb dysfunctional
eerie egotistical embarrassing enraged erratic evasive evil exasperating
excessive excruciating exhausted expensive faulty feeble fickle filthy
flawed flimsy foolish forgetful forlorn foul fraudulent frightening
frigid frivolous frustrating furious fussy futile gaudy ghastly gloomy
glum grave greedy grim grimy gross grotesque grouchy gruesome grumpy
guilty gullible haggard hapless harmful harsh hateful haughty hazardous
heartbreaking heartless heinous helpless hesitant hideous hollow homely
hopeless horrendous horrible horrid horrific hostile humiliating hurtful
hysterical icky idiotic ignorant ill illegal illegible illicit immature
immoral impatient impolite impossible impractical improper imprudent
impulsive inadequate inane incompetent incomplete inconsiderate
inconsistent inconvenient incorrect indecent indecisive indifferent
ineffective inefficient inept inexcusable infamous inferior infuriating
inhumane insane insecure insensitive insidious insignificant insincere
insolent insufferable insufficient insulting intolerable intolerant
irksome irrational irresponsible irritable irritating jaded jealous
joyless judgmental lame lazy lethal lousy ludicrous lukewarm malicious
maniacal mean mediocre melancholy menacing merciless messy miserable
miserly misguided moldy monotonous monstrous moody morbid mundane murky
nasty naughty nauseating needy negative negligent nervous noisy
nonsensical noxious objectionable obnoxious obscene obsolete obstinate
odious offensive ominous oppressive outdated outrageous overbearing
overpriced overwhelming painful paltry paranoid pathetic pessimistic
petty phony pitiful pointless poisonous pompous poor powerless
preposterous pretentious prickly primitive problematic provocative
pushy puzzling quarrelsome questionable rabid rancid reckless redundant
regretful regrettable remorseful repugnant repulsive resentful restless
ridiculous rigid rotten rough rowdy rude rusty ruthless sad sarcastic
scandalous scary scornful scrawny screeching selfish senseless severe
shabby shaky shallow shameful shameless shocking shoddy sick sickening
sinister skeptical sketchy slimy sloppy slow sluggish sly smug snide
snobbish somber sour spiteful spoiled spooky stale stingy stormy strange
stressful strict stubborn stuffy stupid subpar substandard suspicious
tacky tactless tarnished tasteless tedious terrible terrifying testy
threatening tiresome toxic tragic traumatic treacherous tricky trite
troublesome turbulent ugly unacceptable unappealing unattractive
unbearable uncertain uncomfortable uncooperative undesirable uneasy
unethical unfair unfavorable unforgiving unfortunate unfriendly ungrateful
unhappy unhealthy unimpressive uninspired unjust unkempt unkind unlucky
unnatural unnecessary unpleasant unpopular unprofessional unreasonable
unreliable unruly unsafe unsanitary unsatisfactory unscrupulous unsightly
unstable unsuccessful untidy untrustworthy unusable unwelcome unwise
upset useless vague vain vengeful vicious vile villainous vindictive
violent volatile vulgar weak weary wicked wild wobbly woeful worthless
wretched wrong
""".split()

NEG_VERB = """
abandon abhor abuse accuse aggravate agitate alarm alienate anger annoy
antagonize argue assault attack avoid bash belittle berate betray bicker
blame bore bother break bully burden capsize censure cheat choke collapse
complain condemn confuse conspire corrode corrupt crash criticize crumble
crush cry curse damage deceive decay defame degrade dehumanize demean
demolish demoralize denounce deplete deplore depress deprive deride
despair despise destroy deteriorate detest devalue disappoint disapprove
discourage disgrace disgust dishearten dislike dismay disparage displease
disregard disrespect distort distress disturb dominate doubt dread
embarrass endanger enrage erode exaggerate exclude exploit fail falter
fear flounder forfeit frighten frustrate fumble grieve grumble harass
harm hate hinder hoard humiliate hurt ignore impair impede infect inflame
infuriate injure insult interfere intimidate irritate jeopardize lament
languish lie loathe lose malign manipulate menace mislead mistreat
mistrust mock mourn nag neglect obstruct offend oppress ostracize overreact
panic patronize penalize perish persecute pester plague plunder pollute
provoke punish quarrel quit rant rebuke refuse regret reject repel
reprimand resent retaliate ridicule rot ruin sabotage scare scold scorn
scream shatter shun sink slander slump smear smother sneer snub spoil
stagnate starve steal stress struggle stumble suffer suffocate sulk
suppress tarnish taunt tease terrify terrorize threaten torment torture
trample undermine unnerve upset vandalize vex victimize vilify violate
wail weaken whine worry worsen wreck
""".split()

NEG_NOUN = """
abuse accident accusation adversary adversity affliction aggression agony
ailment animosity anguish annoyance anxiety apathy atrocity bankruptcy
betrayal bigotry blunder bother breakdown bribery brute bully burden
calamity casualty catastrophe chaos coercion collapse collision complaint
conflict confusion conspiracy contempt controversy corruption cowardice
crime criminal crisis critic cruelty culprit curse damage danger deadlock
death debacle debt deceit defeat defect deficiency deficit degradation
delay delusion demise denial despair destruction detriment devastation
dilemma disadvantage disagreement disappointment disaster disbelief
discomfort discord discrimination disdain disease disgrace disgust
dishonesty dismay disorder dispute disruption dissatisfaction distress
distrust doom doubt drawback dread drought dysfunction embarrassment
emergency enemy envy epidemic failure famine fatigue fear feud fiasco
filth flaw foe fraud frustration fury garbage greed grief grievance
grudge guilt harassment hardship harm hatred havoc hazard heartache
hostility humiliation hypocrisy idiot ignorance illness impostor inability
incompetence inconvenience indifference indignity inequality infection
inferiority injustice insanity insecurity insult interference intolerance
jealousy junk lawsuit liability liar loneliness loss malice mayhem menace
mess misconduct misery misfortune mishap mistake mistrust misunderstanding
mockery monster murder murderer negligence nightmare nonsense nuisance
obstacle offense oppression outrage pain pandemonium panic peril
pessimism pest pity plague plight poison pollution poverty prejudice
pressure problem quarrel rage rebellion recession regret rejection remorse
resentment revenge riot risk rivalry rubbish rudeness ruin rumor sabotage
scam scandal scarcity shame shortage sorrow spite stain stigma strain
stress strife struggle stupidity suspicion sloth tantrum tension terror
theft threat torment tragedy traitor trauma trouble turmoil tyranny
uncertainty unemployment unrest vandalism vengeance villain violence
weakness woe worry wrath wreck wrongdoing
""".split()

# Fixed forms that the class-based expansion would not produce.
EXTRA_POS = """
best better finest loveliest happiest luckier luckiest nicer nicest
sweeter sweetest stronger strongest smarter smartest brighter brightest
cleaner cleanest cooler coolest cool fairer finer friendlier funnier
gentler grander greater greatest happier healthier kinder mightier
prettier prettiest richer safer simpler smoother softer warmer wiser
won loved loving beloved adored cherished admired praised acclaimed
celebrated honored gifted blessed thrilled delighted pleased satisfied
impressed amused fascinated captivated enchanted charmed overjoyed
heartened reassured congratulations bravo hooray hurrah kudos yay
""".split()

EXTRA_NEG = """
worst worse meaner meanest uglier ugliest weaker weakest sicker sickest
angrier angriest sadder saddest poorer poorest duller dullest harsher
nastier nastiest slower stupider grimmer darker bleaker crueler
lost broken shattered ruined wrecked damaged doomed cursed despised
hated loathed dreaded feared scorned mocked ridiculed insulted betrayed
deceived cheated wronged abused neglected ignored ignoring ignores ignore
disappointed frustrated annoyed irritated enraged infuriated disgusted
appalled horrified terrified frightened scared worried troubled ashamed
embarrassed humiliated offended insufferably ugh yuck eww darn damn
""".split()

# Words that must never land in the lexicon: neutral function words,
# auxiliaries, and ambiguous forms that would skew the polarity features.
EXCLUDE = set("""
a an the this that these those i you he she it we they me him her us them
be been being am is are was were do does did have has had can could will
would shall should may might must decide decided decides deciding wait
waits waited waiting like likes liked liking quick quickly same exact much
most more please dear ready okay ok well just today tonight early late
night day time class job work rash rashes covered cover hives being so
very too really totally way name text keep
""".split())


def drop_e(stem):
    return stem[:-1] if stem.endswith("e") else stem


def verb_forms(stem):
    forms = {stem}
    if stem.endswith(("s", "x", "z", "ch", "sh")):
        forms.add(stem + "es")
    elif stem.endswith("y") and stem[-2:-1] not in "aeiou":
        forms.add(stem[:-1] + "ies")
        forms.add(stem[:-1] + "ied")
    else:
        forms.add(stem + "s")
    if not stem.endswith("y") or stem[-2:-1] in "aeiou":
        forms.add(drop_e(stem) + "ed" if not stem.endswith("e") else stem + "d")
    forms.add(drop_e(stem) + "ing")
    return forms


def adj_forms(stem):
    forms = {stem}
    if stem.endswith("y") and stem[-2:-1] not in "aeiou":
        forms.add(stem[:-1] + "ily")
        forms.add(stem[:-1] + "iness")
    elif stem.endswith("le"):
        forms.add(stem[:-1] + "y")
    elif stem.endswith("ic"):
        forms.add(stem + "ally")
    elif not stem.endswith("ly") and "-" not in stem:
        forms.add(stem + "ly")
        forms.add(stem + "ness")
    return forms


def noun_forms(stem):
    forms = {stem}
    if stem.endswith(("s", "x", "z", "ch", "sh")):
        forms.add(stem + "es")
    elif stem.endswith("y") and stem[-2:-1] not in "aeiou":
        forms.add(stem[:-1] + "ies")
    elif not stem.endswith(("ness", "ism")):
        forms.add(stem + "s")
    return forms


def expand(adjs, verbs, nouns, extras):
    words = set()
    for stem in adjs:
        words |= adj_forms(stem)
    for stem in verbs:
        words |= verb_forms(stem)
    for stem in nouns:
        words |= noun_forms(stem)
    words |= set(extras)
    return {w for w in words if w not in EXCLUDE}


REQUIRED_POS = {"love", "fun", "good", "great", "amazing", "awesome",
                "excited", "happy", "proud", "realistic", "original",
                "right", "recommend", "popular"}
REQUIRED_NEG = {"hate", "wrong", "controversy"}


def main():
    pos = expand(POS_ADJ, POS_VERB, POS_NOUN, EXTRA_POS)
    neg = expand(NEG_ADJ, NEG_VERB, NEG_NOUN, EXTRA_NEG)
    both = pos & neg
    pos -= both
    neg -= both

    missing = (REQUIRED_POS - pos) | (REQUIRED_NEG - neg)
    if missing:
        sys.exit("seed lists lost required words: %s" % sorted(missing))
    leaked = (pos | neg) & EXCLUDE
    if leaked:
        sys.exit("excluded words leaked: %s" % sorted(leaked))

    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    out = os.path.join(root, "data", "sentiment_lexicon.tsv")
    entries = [(w, "1.0") for w in pos] + [(w, "-1.0") for w in neg]
    entries.sort()
    with open(out, "w") as fh:
        fh.write("# generated by scripts/make_lexicon.py; do not edit\n")
        for word, score in entries:
            fh.write("%s\t%s\n" % (word, score))
    print("wrote %d entries (%d positive, %d negative) to %s"
          % (len(entries), len(pos), len(neg), out))


if __name__ == "__main__":
    main()
