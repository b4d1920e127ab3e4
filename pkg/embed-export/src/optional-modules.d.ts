// Optional transformer runtime: only present when the user installs it for
// the bert/t5 models, so it is typed loosely and imported dynamically.
declare module "@xenova/transformers";
