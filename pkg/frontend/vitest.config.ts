import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    // the integration suite boots the Python service once per file
    testTimeout: 20000,
    hookTimeout: 60000,
  },
});
