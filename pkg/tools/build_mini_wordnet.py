#!/usr/bin/env python3
"""Generate the bundled miniature WordNet database in WNDB format.

Writes index.noun/data.noun/index.verb/data.verb plus exception lists under
src/sysmlforge/data/wordnet/.  The files follow the WNDB grammar (synset
offsets are byte offsets of the line within the data file), so any parser
of real WordNet 3.x databases can read them.  Regenerate with:

    python tools/build_mini_wordnet.py
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "sysmlforge" / "data" / "wordnet"

HEADER = (
    "  1 This file is part of the sysmlforge bundled mini lexical database.\n"
    "  2 It follows the WNDB on-disk format; for production use point the\n"
    "  3 pipeline at a full WordNet 3.x database directory instead.\n"
)


@dataclass
class Syn:
    key: str
    lemmas: list[str]
    parents: list[str]
    gloss: str
    pos: str = "n"
    parts: list[str] = field(default_factory=list)       # part meronyms (%p)
    entails: list[str] = field(default_factory=list)     # verb entailment (*)
    causes: list[str] = field(default_factory=list)      # verb cause (>)
    children: list[str] = field(default_factory=list)    # filled in
    part_of: list[str] = field(default_factory=list)     # filled in


def n(key: str, lemmas: str, parents: str, gloss: str, parts: str = "") -> Syn:
    return Syn(
        key=key,
        lemmas=lemmas.split(),
        parents=parents.split(),
        gloss=gloss,
        pos="n",
        parts=parts.split(),
    )


def v(key: str, lemmas: str, parents: str, gloss: str, entails: str = "", causes: str = "") -> Syn:
    return Syn(
        key=key,
        lemmas=lemmas.split(),
        parents=parents.split(),
        gloss=gloss,
        pos="v",
        entails=entails.split(),
        causes=causes.split(),
    )


NOUNS = [
    n("entity", "entity", "", "that which is perceived or known or inferred to have its own distinct existence, living or nonliving"),
    n("physical_entity", "physical_entity", "entity", "an entity that has physical existence"),
    n("abstraction", "abstraction abstract_entity", "entity", "a general concept formed by extracting common features from specific examples"),
    # physical branch
    n("object", "object physical_object", "physical_entity", "a tangible and visible entity; an entity that can cast a shadow"),
    n("whole", "whole unit", "object", "an assemblage of parts that is regarded as a single entity"),
    n("artifact", "artifact artefact", "whole", "a man-made object taken as a whole"),
    n("instrumentality", "instrumentality instrumentation", "artifact", "an artifact or system of artifacts that is instrumental in accomplishing some end"),
    n("device", "device", "instrumentality", "an instrumentality invented for a particular purpose; \"the device is small enough to wear on your wrist\""),
    n("machine", "machine", "device", "any mechanical or electrical device that transmits or modifies energy to perform or assist in the performance of human tasks"),
    n("engine", "engine", "machine", "motor that converts thermal energy to mechanical work"),
    n("computer", "computer computing_machine data_processor", "machine", "a machine for performing calculations automatically"),
    n("pump", "pump", "machine", "a mechanical device that moves fluid or gas by pressure or suction"),
    n("mechanism", "mechanism", "device", "device consisting of a piece of machinery; has moving parts that perform some function"),
    n("actuator", "actuator", "mechanism", "a mechanism that puts something into automatic action"),
    n("valve", "valve", "mechanism", "control consisting of a mechanical device for controlling the flow of a fluid"),
    n("control_device", "control controller", "mechanism", "a mechanism that controls the operation of a machine; \"the controller regulates the pump\""),
    n("gear", "gear gear_wheel cogwheel", "mechanism", "a toothed wheel that works with others to alter the relation between the speed of a driving mechanism and the speed of the driven parts"),
    n("instrument", "instrument", "device", "a device that requires skill for proper use"),
    n("sensor", "sensor detector sensing_element", "instrument", "any device that receives a signal or stimulus such as heat or pressure or light or motion and responds to it in a distinctive manner"),
    n("measuring_instrument", "measuring_instrument measuring_device", "instrument", "instrument that shows the extent or amount or quantity or degree of something"),
    n("display_device", "display video_display", "device", "an electronic device that represents information in visual form on a screen"),
    n("filter_device", "filter", "device", "device that removes something from whatever passes through it"),
    n("battery", "battery electric_battery", "device", "a device that produces electricity; may have several primary or secondary cells arranged in parallel or series"),
    n("manipulator", "manipulator", "device", "a device used to move or control objects at a distance or with precision"),
    n("system", "system", "instrumentality", "instrumentality that combines interrelated interacting artifacts designed to work as a coherent entity"),
    n("network", "network", "system", "a system of intersecting lines or channels or interconnected components"),
    n("equipment", "equipment", "instrumentality", "an instrumentality needed for an undertaking or to perform a service"),
    n("container", "container", "instrumentality", "any object that can be used to hold things"),
    n("tank", "tank storage_tank", "container", "a large vessel for holding gases or liquids"),
    n("vessel", "vessel", "container", "an object used as a container, especially for liquids"),
    n("conduit", "conduit", "instrumentality", "a passage through which water or electric wires can pass"),
    n("pipe", "pipe piping", "conduit", "a long tube made of metal or plastic that is used to carry water or oil or gas"),
    n("structure", "structure construction", "artifact", "a thing constructed; a complex entity constructed of many parts"),
    n("building", "building edifice", "structure", "a structure that has a roof and walls and stands more or less permanently in one place"),
    n("creation", "creation", "artifact", "an artifact that has been brought into existence by someone"),
    n("product", "product production", "creation", "an artifact that has been created by someone or some process"),
    n("representation", "representation", "creation", "a creation that is a visual or tangible rendering of someone or something"),
    n("map", "map", "representation", "a diagrammatic representation of the surface of the earth or part of it showing roads and regions"),
    n("diagram", "diagram", "representation", "a drawing intended to explain how something works; a drawing showing the relation between the parts"),
    n("covering", "covering", "artifact", "an artifact that covers something else"),
    n("screen", "screen", "covering", "a covering that serves to conceal or shelter something; also the surface on which pictures or information can be displayed"),
    n("living_thing", "living_thing animate_thing", "whole", "a living or once living entity"),
    n("organism", "organism being", "living_thing", "a living thing that has or can develop the ability to act or function independently"),
    n("animal", "animal animate_being beast creature fauna", "organism", "a living organism characterized by voluntary movement"),
    n("chordate", "chordate", "animal", "any animal of the phylum having a notochord or spinal column"),
    n("vertebrate", "vertebrate craniate", "chordate", "animals having a bony or cartilaginous skeleton with a segmented spinal column"),
    n("mammal", "mammal mammalian", "vertebrate", "any warm-blooded vertebrate having the skin more or less covered with hair"),
    n("carnivore", "carnivore", "mammal", "a terrestrial or aquatic flesh-eating mammal"),
    n("dog", "dog domestic_dog", "carnivore", "a member of the genus Canis that has been domesticated by man since prehistoric times"),
    n("cat", "cat true_cat", "carnivore", "feline mammal usually having thick soft fur and no ability to roar; domestic cats and wildcats"),
    n("ungulate", "ungulate hoofed_mammal", "mammal", "any of a number of mammals with hooves"),
    n("horse", "horse", "ungulate", "solid-hoofed herbivorous quadruped domesticated since prehistoric times"),
    n("bird", "bird", "vertebrate", "warm-blooded egg-laying vertebrates characterized by feathers and forelimbs modified as wings"),
    n("goose", "goose", "bird", "web-footed long-necked typically gregarious migratory aquatic birds usually larger and less aquatic than ducks"),
    n("duck", "duck", "bird", "small wild or domesticated web-footed broad-billed swimming bird usually having a depressed body and short legs"),
    n("person", "person individual someone somebody mortal soul", "organism", "a human being; \"there was too much for one person to do\""),
    n("worker", "worker", "person", "a person who works at a specific occupation"),
    n("employee", "employee", "worker", "a worker who is hired to perform a job"),
    n("engineer", "engineer applied_scientist", "worker", "a person who uses scientific knowledge to solve practical problems"),
    n("leader", "leader", "person", "a person who rules or guides or inspires others"),
    n("president", "president", "leader", "the chief executive officer of a firm or corporation or club or society"),
    n("expert", "expert", "person", "a person with special knowledge or ability who performs skillfully"),
    n("user", "user", "person", "a person who makes use of a thing; someone who uses or employs something"),
    n("man", "man adult_male", "person", "an adult person who is male"),
    n("woman", "woman adult_female", "person", "an adult female person"),
    n("child", "child kid", "person", "a young person of either sex"),
    n("plant", "plant flora plant_life", "organism", "a living organism lacking the power of locomotion"),
    n("woody_plant", "woody_plant ligneous_plant", "plant", "a plant having hard lignified tissues or woody parts especially stems"),
    n("tree", "tree", "woody_plant", "a tall perennial woody plant having a main trunk and branches forming a distinct elevated crown", parts="trunk limb crown"),
    n("natural_object", "natural_object", "whole", "an object occurring naturally; not made by man"),
    n("plant_part", "plant_part plant_structure", "natural_object", "any part of a plant or fungus"),
    n("trunk", "trunk tree_trunk bole", "plant_part", "the main stem of a tree; usually covered with bark"),
    n("limb", "limb tree_branch", "plant_part", "any of the main branches arising from the trunk or a bough of a tree"),
    n("crown", "crown treetop", "plant_part", "the upper branches and leaves of a tree or other plant"),
    n("rock", "rock stone", "natural_object", "a lump or mass of hard consolidated mineral matter"),
    n("body_part", "body_part", "physical_entity", "any part of an organism such as an organ or extremity"),
    n("organ", "organ", "body_part", "a fully differentiated structural and functional unit in an animal that is specialized for some particular function"),
    n("gland", "gland secretory_organ", "organ", "any of various organs that synthesize substances needed by the body and release it through ducts or directly into the bloodstream"),
    n("pancreas", "pancreas", "gland", "a large elongated exocrine gland located behind the stomach; secretes pancreatic juice and insulin"),
    n("heart", "heart pump_organ", "organ", "the hollow muscular organ located behind the sternum and between the lungs; its contractions move the blood through the body"),
    n("geological_formation", "geological_formation formation", "object", "the geological features of the earth"),
    n("bank_financial", "bank banking_concern", "financial_institution", "a financial institution that accepts deposits and channels the money into lending activities"),
    n("bank_river", "bank", "geological_formation", "sloping land beside a body of water; the shore of a river or lake where water meets the land"),
    n("shore", "shore", "geological_formation", "the land along the edge of a body of water"),
    n("mountain", "mountain mount", "geological_formation", "a land mass that projects well above its surroundings; higher than a hill"),
    n("location", "location", "object", "a point or extent in space"),
    n("region", "region part_region", "location", "the extended spatial location of something"),
    n("substance", "substance matter", "physical_entity", "the real physical matter of which a person or thing consists"),
    n("fluid", "fluid", "substance", "a substance that is fluid at room temperature and pressure; continuous amorphous matter that tends to flow"),
    n("liquid", "liquid", "fluid", "a substance that is liquid at room temperature and pressure"),
    n("water", "water h2o", "liquid", "binary compound that occurs at room temperature as a clear colorless odorless tasteless liquid; widely used as a solvent"),
    n("gas", "gas", "fluid", "a fluid in the gaseous state having neither independent shape nor volume"),
    n("material", "material stuff", "substance", "the tangible substance that goes into the makeup of a physical object"),
    n("metal", "metal metallic_element", "material", "any of several chemical elements that are usually shiny solids that conduct heat or electricity"),
    n("starch", "starch amylum", "material", "a complex carbohydrate found chiefly in seeds, fruits, tubers, roots and stem pith of plants"),
    n("physical_process", "process physical_process", "physical_entity", "a sustained phenomenon or one marked by gradual changes through a series of states"),
    n("flow", "flow flowing", "physical_process", "the motion characteristic of fluids such as liquids or gases"),
    # abstraction branch
    n("psychological_feature", "psychological_feature", "abstraction", "a feature of the mental life of a living organism"),
    n("cognition", "cognition knowledge noesis", "psychological_feature", "the psychological result of perception and learning and reasoning"),
    n("content_cognition", "content cognitive_content mental_object", "cognition", "the sum or range of what has been perceived, discovered, or learned"),
    n("idea", "idea thought", "content_cognition", "the content of cognition; the main thing you are thinking about"),
    n("concept", "concept conception construct", "idea", "an abstract or general idea inferred or derived from specific instances"),
    n("hypothesis", "hypothesis possibility theory", "concept", "a tentative insight into the natural world; a concept that is not yet verified"),
    n("model_concept", "model theoretical_account framework", "hypothesis", "a hypothetical description of a complex entity or process; \"the computer program was based on a model of the circulatory and respiratory systems\""),
    n("prediction", "prediction anticipation", "content_cognition", "a statement formulated from a model about what will happen in the future; the act of reasoning about the future"),
    n("information", "information", "cognition", "knowledge acquired through study or experience or instruction"),
    n("data", "data information_content", "information", "a collection of facts or measurements from which conclusions may be drawn"),
    n("event", "event", "psychological_feature", "something that happens at a given place and time"),
    n("act", "act deed human_action human_activity", "event", "something that people do or cause to happen"),
    n("action", "action", "act", "something done, usually as opposed to something said"),
    n("activity", "activity", "act", "any specific behavior; \"they avoided all recreational activity\""),
    n("operation", "operation functioning performance", "activity", "process or manner of functioning or operating; \"the pump's operation is controlled by the sensor\""),
    n("use_activity", "use usage utilization", "activity", "the act of using something; the application of a means to an end"),
    n("measurement", "measurement measuring", "activity", "the act or process of assigning numbers to phenomena according to a rule"),
    n("group", "group grouping", "abstraction", "any number of entities, members, considered as a unit"),
    n("collection", "collection aggregation", "group", "several things grouped together or considered as a whole"),
    n("social_group", "social_group", "group", "people sharing some social relation"),
    n("organization", "organization organisation", "social_group", "a group of people who work together toward some end"),
    n("company", "company", "organization", "an institution created to conduct business; \"the company has many employees\""),
    n("institution", "institution establishment", "organization", "an organization founded and united for a specific purpose"),
    n("financial_institution", "financial_institution financial_organization", "institution", "an institution such as a bank that deals in money and the provision of credit"),
    n("club", "club social_club guild", "organization", "a formal association of people with similar interests; \"the rowing club elected a new president\""),
    n("industry", "industry manufacture", "group", "the organized action of making of goods and services for sale"),
    n("attribute", "attribute", "abstraction", "an abstraction belonging to or characteristic of an entity"),
    n("property", "property attribute_dimension", "attribute", "a basic or essential attribute shared by all members of a class"),
    n("state", "state", "attribute", "the way something is with respect to its main attributes"),
    n("condition", "condition status", "state", "a state at a particular time"),
    n("shape", "shape form", "attribute", "the spatial arrangement of something as distinct from its substance"),
    n("possession", "possession", "abstraction", "anything owned or possessed"),
    n("asset", "asset plus_value", "possession", "a useful or valuable quality or thing owned"),
    n("measure", "measure quantity amount", "abstraction", "how much there is or how many there are of something that you can quantify"),
    n("number", "number", "measure", "a concept of quantity involving zero and units; \"every number has a unique position in the sequence\""),
    n("time_period", "time_period period", "measure", "an amount of time; \"a time period of 30 years\""),
    n("relation", "relation", "abstraction", "an abstraction belonging to or characteristic of two entities or parts together"),
    n("part_relation", "part portion component_part component", "relation", "something determined in relation to something that includes it; \"the pump is a component of the system\""),
    n("function_relation", "function mathematical_function", "relation", "a mathematical relation such that each element of a given set is associated with an element of another set"),
    n("communication", "communication", "abstraction", "something that is communicated by or to or between people or groups"),
    n("message", "message", "communication", "a communication, usually brief, that is written or spoken or signaled"),
    n("statement", "statement", "message", "a message that is stated or declared; a communication in speech or writing"),
    n("requirement_statement", "requirement demand", "statement", "a statement of what is needed or necessary; required activity"),
    n("signal", "signal signaling sign", "communication", "any nonverbal action or gesture that encodes a message"),
    n("document", "document written_document papers", "communication", "writing that provides information, especially of an official nature"),
]

VERBS = [
    v("have_verb", "have have_got hold", "", "have or possess, either in a concrete or an abstract sense; \"the system has a display\""),
    v("include_verb", "include", "have_verb", "have as a part; be made of or contain; \"the system includes a water pump\""),
    v("contain_verb", "contain", "include_verb", "include or contain; have as a component; \"the tank contains water\""),
    v("comprise_verb", "comprise incorporate", "include_verb", "be composed of; include or contain as members or parts"),
    v("consist_verb", "consist", "", "be composed or made up of; \"the machine consists of several parts\""),
    v("own_verb", "own possess", "have_verb", "have ownership or possession of"),
    v("be_verb", "be exist", "", "have an existence; have the quality of being"),
    v("move_verb", "move travel", "", "change location; move, travel, or proceed"),
    v("transfer_verb", "transfer", "move_verb", "move from one place to another"),
    v("send_verb", "send direct", "transfer_verb", "cause to go somewhere; to send a message or a signal to a destination"),
    v("function_verb", "function work operate go run", "", "perform as expected when applied; \"the pump runs day and night\""),
    v("get_verb", "get acquire", "", "come into the possession of something concrete or abstract"),
    v("receive_verb", "receive", "get_verb", "get something; come into possession of"),
    v("change_verb", "change alter modify", "", "cause to change; make different; cause a transformation"),
    v("heat_verb", "heat heat_up", "change_verb", "make hot or hotter; \"the boiler heats the water\""),
    v("cool_verb", "cool chill cool_down", "change_verb", "make cold or colder; lose intensity of heat"),
    v("control_verb", "control command", "", "exercise authoritative control or power over; verify by comparing to a standard"),
    v("regulate_verb", "regulate modulate", "control_verb", "fix or adjust the time, amount, degree, or rate of"),
    v("make_verb", "make create", "", "make or cause to be or to become; bring into existence"),
    v("produce_verb", "produce", "make_verb", "create or manufacture a man-made product"),
    v("generate_verb", "generate bring_forth", "make_verb", "bring into existence; give rise to; produce as a result"),
    v("connect_verb", "connect link tie link_up", "", "connect, fasten, or put together two or more pieces or parts"),
    v("attach_verb", "attach", "connect_verb", "cause to be attached; become attached to something"),
    v("sleep_verb", "sleep slumber", "", "be asleep; be in a state of natural rest"),
    v("snore_verb", "snore saw_wood", "", "breathe noisily during one's sleep", entails="sleep_verb"),
    v("kill_verb", "kill", "", "cause to die; put to death", causes="die_verb"),
    v("die_verb", "die decease perish", "", "pass from physical life and lose all bodily attributes and functions"),
    v("communicate_verb", "communicate intercommunicate", "", "transmit information, thoughts, or feelings to a receiver"),
    v("say_verb", "say tell state", "communicate_verb", "express in words; communicate or express a message"),
    v("request_verb", "request bespeak", "communicate_verb", "express the need or desire for; ask for"),
    v("order_verb", "order", "request_verb", "make a request for something; give instructions to or direct somebody to do something"),
    v("detect_verb", "detect observe find discover notice", "", "discover or determine the existence, presence, or fact of"),
    v("measure_verb", "measure quantify", "", "determine the measurements of something or somebody; take measurements of"),
    v("show_verb", "show", "", "make visible or noticeable; cause to be perceived"),
    v("display_verb", "display exhibit expose", "show_verb", "to show, make visible or apparent on a screen or surface"),
    v("use_verb", "use utilize employ apply", "", "put into service; make work or employ for a particular purpose"),
    v("give_verb", "give", "", "cause to have, in the abstract sense or physical sense"),
    v("provide_verb", "provide supply furnish", "give_verb", "give something useful or necessary to"),
    v("store_verb", "store hive_away", "", "keep or lay aside for future use; \"the tank stores water for the system\""),
    v("support_verb", "support back_up", "", "give moral or physical assistance or strength to; keep from failing"),
    v("fail_verb", "fail go_bad give_way break", "", "stop operating or functioning; be unsuccessful"),
    v("open_verb", "open open_up", "", "cause to open or become open; \"the controller opens the valve\""),
    v("predict_verb", "predict forecast anticipate", "", "make a prediction about; tell in advance"),
    v("calculate_verb", "calculate compute", "", "make a mathematical calculation or computation"),
    v("feed_verb", "feed", "", "introduce continuously; supply to a machine or a process"),
    v("eat_verb", "eat", "", "take in solid food"),
    v("compile_verb", "compile", "", "use a computer program to translate source code into object code; put together out of existing material"),
    v("cause_verb", "cause make_happen", "", "give rise to; cause to happen or occur"),
    v("turn_verb", "turn", "move_verb", "cause to move around or rotate; change orientation or direction"),
    v("monitor_verb", "monitor supervise", "detect_verb", "keep tabs on; keep an eye on; observe the behavior of a system"),
]

NOUN_EXC = [
    ("geese", "goose"),
    ("men", "man"),
    ("women", "woman"),
    ("children", "child"),
]

VERB_EXC = [
    ("sent", "send"),
    ("ate", "eat"),
    ("slept", "sleep"),
    ("fed", "feed"),
    ("ran", "run"),
    ("went", "go"),
    ("made", "make"),
    ("got", "get"),
    ("gave", "give"),
    ("held", "hold"),
    ("told", "tell"),
    ("said", "say"),
    ("was", "be"),
    ("were", "be"),
    ("been", "be"),
    ("being", "be"),
    ("am", "be"),
    ("is", "be"),
    ("are", "be"),
    ("did", "do"),
    ("done", "do"),
    ("had", "have"),
    ("has", "have"),
    ("broke", "break"),
    ("broken", "break"),
    ("died", "die"),
]

LEXFILE = {"n": 3, "v": 29}


def build(pos: str, synsets: list[Syn]) -> tuple[str, str]:
    """Render (data_text, index_text) for one part of speech."""
    by_key = {s.key: s for s in synsets}
    for s in synsets:
        for p in s.parents:
            by_key[p].children.append(s.key)
        for p in s.parts:
            by_key[p].part_of.append(s.key)

    def pointers(s: Syn) -> list[tuple[str, str]]:
        ptrs: list[tuple[str, str]] = []
        ptrs.extend(("@", p) for p in s.parents)
        ptrs.extend(("~", c) for c in s.children)
        ptrs.extend(("%p", p) for p in s.parts)
        ptrs.extend(("#p", w) for w in s.part_of)
        ptrs.extend(("*", t) for t in s.entails)
        ptrs.extend((">", t) for t in s.causes)
        return ptrs

    def render_line(s: Syn, off: dict[str, int]) -> str:
        fields = [f"{off[s.key]:08d}", f"{LEXFILE[pos]:02d}", pos, f"{len(s.lemmas):02x}"]
        for lemma in s.lemmas:
            fields.extend([lemma, "0"])
        ptrs = pointers(s)
        fields.append(f"{len(ptrs):03d}")
        for sym, target in ptrs:
            fields.extend([sym, f"{off[target]:08d}", pos, "0000"])
        if pos == "v":
            fields.extend(["01", "+", "02", "00"])
        return " ".join(fields) + f" | {s.gloss}  "

    # first pass with zero offsets fixes every line length (offsets are 8 chars)
    zero = {s.key: 0 for s in synsets}
    cursor = len(HEADER.encode())
    offsets: dict[str, int] = {}
    for s in synsets:
        offsets[s.key] = cursor
        cursor += len(render_line(s, zero).encode()) + 1
    data_text = HEADER + "".join(render_line(s, offsets) + "\n" for s in synsets)

    # index: lemma -> synsets containing it, in declaration order
    lemma_senses: dict[str, list[Syn]] = {}
    for s in synsets:
        for lemma in s.lemmas:
            lemma_senses.setdefault(lemma, []).append(s)
    index_lines = []
    for lemma in sorted(lemma_senses):
        senses = lemma_senses[lemma]
        symbols: list[str] = []
        for s in senses:
            for sym, _ in pointers(s):
                if sym not in symbols:
                    symbols.append(sym)
        fields = [lemma, pos, str(len(senses)), str(len(symbols))]
        fields.extend(symbols)
        fields.extend([str(len(senses)), "0"])
        fields.extend(f"{offsets[s.key]:08d}" for s in senses)
        index_lines.append(" ".join(fields) + "  ")
    index_text = HEADER + "\n".join(index_lines) + "\n"
    return data_text, index_text


def main() -> int:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for pos, synsets, exc in (("n", NOUNS, NOUN_EXC), ("v", VERBS, VERB_EXC)):
        name = {"n": "noun", "v": "verb"}[pos]
        data_text, index_text = build(pos, synsets)
        (OUT_DIR / f"data.{name}").write_text(data_text, encoding="ascii")
        (OUT_DIR / f"index.{name}").write_text(index_text, encoding="ascii")
        exc_text = "".join(f"{inflected} {lemma}\n" for inflected, lemma in sorted(exc))
        (OUT_DIR / f"{name}.exc").write_text(exc_text, encoding="ascii")
    print(f"wrote mini WordNet ({len(NOUNS)} noun synsets, {len(VERBS)} verb synsets) to {OUT_DIR}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
