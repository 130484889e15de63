// File export: hand the service's bytes to the browser unchanged.

export function download(filename: string, content: string, mime: string): void {
  const blob = new Blob([content], { type: mime });
  const url = URL.createObjectURL(blob);
  const a = document.createElement("a");
  a.href = url;
  a.download = filename;
  a.click();
  URL.revokeObjectURL(url);
}

/** The .puml exactly as the service returned it; null when nothing loaded. */
export function pumlExport(puml: string | null): string | null {
  return puml;
}

/** The model field of the service response, re-serialized verbatim. */
export function modelExport(model: unknown | null): string | null {
  if (model === null || model === undefined) return null;
  return JSON.stringify(model, null, 2) + "\n";
}
