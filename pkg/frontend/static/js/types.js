/** Wire types for the montyhall HTTP service. */
export {};
