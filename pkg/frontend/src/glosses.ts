/** One-line glosses shown under the category name so annotators can judge
 * contextual correctness (criterion 2) without leaving the card. */

export const CATEGORY_GLOSSES: Record<string, string> = {
  deadline: "time pressure, final dates, running out of time",
  desperation: "hopelessness, having no way out, last resorts",
  fixation: "obsessive preoccupation with a person or cause",
  frustration: "irritation and thwarted goals",
  god: "religion, worship, faith, the divine",
  grievance: "perceived wrongs, injustice done to oneself",
  hate: "hatred, hostility, strong aversion",
  help: "seeking or offering help and support",
  honour: "honour, reputation, respect and its loss",
  impostor: "feeling fake, unmasked, not belonging",
  jealousy: "envy and jealousy of others",
  loneliness: "isolation, being alone, social disconnection",
  murder: "killing a person, homicide",
  paranoia: "suspicion of persecution or conspiracies",
  planning: "preparation, scheduling, making arrangements",
  relationship: "partners, family, friendship ties",
  soldier: "military life, combat roles, warfare duty",
  suicide: "ending one's own life, self-harm",
  surveillance: "being watched, monitoring, spying",
  threat: "threats and intimidation toward others",
  violence: "physical aggression and violent acts",
  weaponry: "weapons, firearms, ammunition, blades",
};

export function glossFor(category: string): string {
  return CATEGORY_GLOSSES[category] ?? "";
}
