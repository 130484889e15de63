import { defineConfig } from "vite";

export default defineConfig({
  server: {
    proxy: {
      "/diagrams": "http://127.0.0.1:8000",
      "/corpora": "http://127.0.0.1:8000",
      "/health": "http://127.0.0.1:8000",
    },
  },
  build: {
    outDir: "dist",
  },
  test: {
    environment: "jsdom",
  },
});
