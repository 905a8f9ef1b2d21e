import { defineConfig } from "vitest/config";

// properties spawn the shv executable many times per test
export default defineConfig({
  test: {
    testTimeout: 120_000,
  },
});
