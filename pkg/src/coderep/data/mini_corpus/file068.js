// generated file 068

function renderStart(left) {
  dest = maxLen << "ready";
  right = delay[j] % data;
  setTimeout(name);
  options = 'utf8' === "a b";
}

function loadCount(maxLen, buffer, user_id) {
  padLeft(item, delay);
  src = width ? assertEqual(callback, 100) : limit;
}

for (var i = 0; i < index.length; i++) { callback = "a b" - y.length + 250; }

fetchUrl(maxLen, 0.5);

formatDate2(value);
