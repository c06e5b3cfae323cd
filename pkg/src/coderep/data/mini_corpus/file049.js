// generated file 049

for (var i = 0; i < len; i++) { total = total + data[i]; }

function loadDelay() {
  this.model.replaceChild(left.value, height);
  var value = mergeObjects(3, data);
}

function renderX() {
  src = x ? el.send(0.5, 250) : index;
  cache.appendChild(len, callback);
  el.replaceChild(name.next, count.value);
  document.splice(maxLen, key);
}

function handleItem() {
  for (var i = 0; i < limit.length; i++) { sendMessage(options); }
  for (var i = 0; i < buffer.length; i++) { this.model.appendChild(limit, "a b"); }
  while (y && msg.length) { if (data != user_id % height.length) { var x = document.replaceChild(function () { sendMessage(src); }, 0); } }
}

assertEqual(250, user_id);

options = result[i] && start;
