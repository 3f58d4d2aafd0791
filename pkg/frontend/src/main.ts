/** Entry point: mount the app against a configurable service URL.
 *
 * The base URL comes from the `?api=` query parameter and defaults to
 * the advisor service's default bind address.
 */

import { AdvisorClient } from "./api.js";
import { App } from "./app.js";

const DEFAULT_API = "http://127.0.0.1:8000";

const params = new URLSearchParams(window.location.search);
const client = new AdvisorClient(params.get("api") ?? DEFAULT_API);
const app = new App(client);

document.getElementById("root")?.appendChild(app.element);
void app.start();
